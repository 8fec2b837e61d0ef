//! Exact-rational weight vectors and the mean-weight bounds: Zhai's
//! bound, the simplex identity, the type bound, the cuboid equality and
//! the pyramid inequality. No floating point anywhere.

use num_rational::Ratio;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::staircase::Staircase;

/// Exact rational scalar used throughout.
pub type Rat = Ratio<i64>;

pub fn rat(num: i64, den: i64) -> Rat {
    Ratio::new(num, den)
}

/// A positive exact-rational weight vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightVector {
    entries: Vec<Rat>,
}

impl WeightVector {
    pub fn new(entries: Vec<Rat>) -> Result<Self> {
        if entries.iter().any(|g| !g.is_positive()) {
            return Err(Error::NonPositiveWeight);
        }
        Ok(Self { entries })
    }

    pub fn from_integers(entries: &[u64]) -> Result<Self> {
        Self::new(entries.iter().map(|&g| Rat::from(g as i64)).collect())
    }

    pub fn entries(&self) -> &[Rat] {
        &self.entries
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    /// True if 1 <= γ_1 <= ... <= γ_{e-1}, the standing hypothesis for
    /// the generalized Wilf ratio.
    pub fn is_sorted_ge_one(&self) -> bool {
        let one = Rat::from(1);
        self.entries.windows(2).all(|w| w[0] <= w[1])
            && self.entries.first().is_none_or(|g| *g >= one)
    }

    /// True if every entry is a (positive) integer.
    pub fn is_integral(&self) -> bool {
        self.entries.iter().all(|g| g.is_integer())
    }

    pub fn dot(&self, p: &[u32]) -> Rat {
        dot(p, &self.entries)
    }
}

pub fn dot(p: &[u32], g: &[Rat]) -> Rat {
    assert_eq!(p.len(), g.len());
    p.iter()
        .zip(g)
        .map(|(&x, w)| Rat::from(x as i64) * w)
        .fold(Rat::zero(), |a, b| a + b)
}

/// Exact sum, mean and maximum of the weights of B.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightStats {
    pub sum: Rat,
    pub mean: Rat,
    pub max: Rat,
}

pub fn weight_stats(b: &Staircase, g: &WeightVector) -> WeightStats {
    assert_eq!(b.dim(), g.dim());
    let weights: Vec<Rat> = b.points().map(|p| g.dot(p)).collect();
    let sum = weights.iter().fold(Rat::zero(), |a, w| a + w);
    let max = weights.iter().max().cloned().unwrap();
    WeightStats {
        mean: sum / Rat::from(b.len() as i64),
        sum,
        max,
    }
}

/// Zhai's bound: mean weight <= (e-1)/e * max weight, e = dim + 1.
pub fn zhai_bound_holds(b: &Staircase, g: &WeightVector) -> bool {
    let stats = weight_stats(b, g);
    let e = b.dim() as i64 + 1;
    stats.mean <= rat(e - 1, e) * stats.max
}

/// Checks the exact simplex identity
/// Σ_{b∈Δ_{n,e}} b·g = (1/e) #Δ_{n,e} (n-1)(g_1+...+g_{e-1}).
pub fn simplex_identity_check(n: u32, e: usize, g: &WeightVector) -> bool {
    assert_eq!(g.dim(), e - 1);
    let delta = Staircase::simplex(n, e);
    let lhs = weight_stats(&delta, g).sum;
    let gsum = g.entries().iter().fold(Rat::zero(), |a, w| a + w);
    let rhs = rat(1, e as i64)
        * Rat::from(delta.len() as i64)
        * Rat::from(n as i64 - 1)
        * gsum;
    lhs == rhs
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundCheck {
    pub lhs: Rat,
    pub rhs: Rat,
    pub holds: bool,
}

/// Type bound: mean weight <= t/(t+1) * max weight with t = t(R(B)).
pub fn type_bound_check(b: &Staircase, g: &WeightVector) -> Result<BoundCheck> {
    let stats = weight_stats(b, g);
    if stats.max.is_zero() {
        return Err(Error::DegenerateMax);
    }
    let t = b.type_of() as i64;
    let rhs = rat(t, t + 1) * stats.max;
    Ok(BoundCheck {
        lhs: stats.mean,
        holds: stats.mean <= rhs,
        rhs,
    })
}

/// Cuboid equality: the mean weight of Q_m is exactly half of m·g.
pub fn cuboid_mean_check(m: &[u32], g: &WeightVector) -> bool {
    let q = Staircase::cuboid(m);
    let stats = weight_stats(&q, g);
    stats.mean == rat(1, 2) * dot(m, g.entries())
}

/// Pyramid inequality: with heights h_b = h(1 - b·g/β), β = max(B·g),
/// the height sum is at least (1/e) #B h.
pub fn pyramid_check(b: &Staircase, g: &WeightVector, h: Rat) -> Result<BoundCheck> {
    assert!(h.is_positive());
    let stats = weight_stats(b, g);
    if stats.max.is_zero() {
        return Err(Error::DegenerateMax);
    }
    let beta = stats.max;
    let lhs = b
        .points()
        .map(|p| h * (Rat::from(1) - g.dot(p) / beta))
        .fold(Rat::zero(), |a, x| a + x);
    let e = b.dim() as i64 + 1;
    let rhs = rat(1, e) * Rat::from(b.len() as i64) * h;
    Ok(BoundCheck {
        lhs,
        holds: lhs >= rhs,
        rhs,
    })
}
