//! The LEX-minimal lift of the Apéry set, the bijection π, the
//! story/strip decomposition and the semigroup Wilf ratio.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;
use crate::staircase::{Point, Staircase};
use crate::weights::{rat, Rat};

/// The lift Ã of the Apéry set into N^{e-1}: for each a in A the
/// LEX-smallest exponent vector of weight a over (g_1, ..., g_{e-1}).
#[derive(Debug, Clone, Serialize)]
pub struct LiftData {
    pub semigroup: NumericalSemigroup,
    pub tilde_a: Staircase,
    /// lift of apery[r], indexed by residue class r mod g0
    pub lift_by_residue: Vec<Point>,
}

/// Strip counts of the story decomposition and the Wilf ratio
/// w(S) = #U / #D.
#[derive(Debug, Clone, Serialize)]
pub struct StoryReport {
    pub n0: u64,
    pub h: Vec<u64>,
    pub h_prime: Vec<u64>,
    pub u_count: u64,
    pub d_count: u64,
    pub wilf_ratio: Rat,
}

/// Wilf's inequality e #L >= c, reported with its integer margin.
#[derive(Debug, Clone, Serialize)]
pub struct WilfCheck {
    pub holds: bool,
    pub margin: i64,
}

/// Computes Ã by minimizing the lift coordinates left to right, backed
/// by a representability table over suffixes of the weight vector.
pub fn lex_min_lift(s: &NumericalSemigroup) -> Result<LiftData> {
    let g0 = s.multiplicity();
    let w: Vec<u64> = s.generators()[1..].to_vec();
    let d = w.len();
    let max_a = s.apery().max();
    let bound = usize::try_from(max_a).map_err(|_| Error::ArithmeticOverflow("lift table"))? + 1;

    // reach[j][v]: v representable over w[j..]
    let mut reach = vec![vec![false; bound]; d + 1];
    reach[d][0] = true;
    for j in (0..d).rev() {
        let (head, tail) = reach.split_at_mut(j + 1);
        let cur = &mut head[j];
        let next = &tail[0];
        let step = w[j] as usize;
        for v in 0..bound {
            cur[v] = next[v] || (v >= step && cur[v - step]);
        }
    }

    let mut lift_by_residue: Vec<Point> = Vec::with_capacity(g0 as usize);
    for &a in &s.apery().apery {
        let mut rem = a;
        let mut x: Point = Vec::with_capacity(d);
        for j in 0..d {
            let mut t = 0u32;
            loop {
                let spent = t as u64 * w[j];
                assert!(spent <= rem, "apery element not representable over suffix");
                let used = rem - spent;
                if reach[j + 1][used as usize] {
                    x.push(t);
                    rem = used;
                    break;
                }
                t += 1;
            }
        }
        debug_assert_eq!(rem, 0);
        lift_by_residue.push(x);
    }

    // Ã is a staircase of size g0 whose weights reproduce A bijectively.
    let tilde_a = Staircase::new(d, lift_by_residue.to_vec())?;
    assert_eq!(tilde_a.len() as u64, g0, "lift must be injective");
    Ok(LiftData {
        semigroup: s.clone(),
        tilde_a,
        lift_by_residue,
    })
}

impl LiftData {
    pub fn weight_vector(&self) -> &[u64] {
        &self.semigroup.generators()[1..]
    }

    pub fn weight_of(&self, p: &[u32]) -> u64 {
        p.iter()
            .zip(self.weight_vector())
            .map(|(&x, &g)| x as u64 * g)
            .sum()
    }

    /// π(x0, ã) = x0 g0 + ã·g; bijective from Z × Ã onto Z.
    pub fn pi(&self, x0: i64, point: &[u32]) -> Result<i64> {
        if !self.tilde_a.contains(point) {
            return Err(Error::PointNotInDomain(point.to_vec()));
        }
        Ok(x0 * self.semigroup.multiplicity() as i64 + self.weight_of(point) as i64)
    }

    /// π^{-1}(n) = ((n - a)/g0, ã) with a the Apéry element of n's class.
    pub fn pi_inverse(&self, n: i64) -> (i64, Point) {
        let g0 = self.semigroup.multiplicity() as i64;
        let r = n.rem_euclid(g0) as usize;
        let a = self.semigroup.apery().apery[r] as i64;
        ((n - a) / g0, self.lift_by_residue[r].clone())
    }

    /// Strip counts h_j, h'_j, the sizes of U and D and the Wilf ratio.
    pub fn stories(&self) -> StoryReport {
        let g0 = self.semigroup.multiplicity();
        let c = self.semigroup.conductor() as i64;
        let max_a = self.semigroup.apery().max();
        let n0 = max_a / g0;
        let weights: Vec<u64> = self.tilde_a.points().map(|p| self.weight_of(p)).collect();

        let mut h = vec![0u64; n0 as usize + 1];
        for &w in &weights {
            h[(w / g0) as usize] += 1;
        }
        // primed strip n: c - (n0-n) g0 - 1 < w <= c - (n0-n) g0 - 1 + g0
        let mut h_prime = vec![0u64; n0 as usize + 1];
        for n in 0..=n0 {
            let lo = c - ((n0 - n) * g0) as i64 - 1;
            h_prime[n as usize] = weights
                .iter()
                .filter(|&&w| lo < w as i64 && w as i64 <= lo + g0 as i64)
                .count() as u64;
        }

        assert_eq!(h.iter().sum::<u64>(), g0);
        assert_eq!(h_prime.iter().sum::<u64>(), g0);
        if (c as u64).is_multiple_of(g0) {
            assert_eq!(h, h_prime, "strips coincide when g0 | c");
        }

        let d_count: u64 = h.iter().enumerate().map(|(j, &x)| j as u64 * x).sum();
        let u_count: u64 = h_prime
            .iter()
            .enumerate()
            .map(|(n, &x)| (n0 - n as u64) * x)
            .sum();
        StoryReport {
            n0,
            h,
            h_prime,
            u_count,
            d_count,
            wilf_ratio: rat(u_count as i64, d_count as i64),
        }
    }

    /// Row counts #H ∩ {x0 = i} for i = n0-1 down to -n0, the
    /// stratification behind the stories picture.
    pub fn story_rows(&self) -> Vec<(i64, u64)> {
        let g0 = self.semigroup.multiplicity() as i64;
        let c = self.semigroup.conductor() as i64;
        let n0 = (self.semigroup.apery().max() / self.semigroup.multiplicity()) as i64;
        let weights: Vec<i64> = self
            .tilde_a
            .points()
            .map(|p| self.weight_of(p) as i64)
            .collect();
        (-n0..n0)
            .rev()
            .map(|i| {
                let count = weights
                    .iter()
                    .filter(|&&w| 0 <= i * g0 + w && i * g0 + w < c)
                    .count() as u64;
                (i, count)
            })
            .collect()
    }
}

/// Wilf's inequality, evaluated both as e #L - c >= 0 and via the
/// Apéry reformulation; the two verdicts must agree.
pub fn wilf_holds(s: &NumericalSemigroup) -> WilfCheck {
    let e = s.embedding_dimension() as i64;
    let margin = e * s.left_count() as i64 - s.conductor() as i64;
    let holds = margin >= 0;

    // (1/g0) Σ a <= (e-1)/e c + (g0-1)/2, exactly
    let g0 = s.multiplicity() as i64;
    let lhs = rat(s.apery().sum() as i64, g0);
    let rhs = rat(e - 1, e) * Rat::from(s.conductor() as i64) + rat(g0 - 1, 2);
    assert_eq!(holds, lhs <= rhs, "Wilf reformulation must agree");
    WilfCheck { holds, margin }
}
