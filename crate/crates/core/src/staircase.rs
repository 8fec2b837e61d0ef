//! Finite complements of artinian monomial ideals in N^d, viewed as
//! staircase diagrams: maximal elements (socle), type, cuboid test,
//! minimal generators of the ideal, weighted Hilbert functions.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// A lattice point in N^d.
pub type Point = Vec<u32>;

/// A finite downward-closed subset B of N^d. Its complement C is an
/// ideal of N^d and X^C is an artinian monomial ideal; the points of B
/// index a monomial basis of the quotient ring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Staircase {
    dim: usize,
    points: BTreeSet<Point>,
}

fn le(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

impl Staircase {
    /// Validates downward closure and builds the staircase.
    pub fn new(dim: usize, points: impl IntoIterator<Item = Point>) -> Result<Self> {
        let points: BTreeSet<Point> = points.into_iter().collect();
        if points.is_empty() {
            return Err(Error::NotDownwardClosed {
                point: vec![],
                missing: vec![0; dim],
            });
        }
        for p in &points {
            if p.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: p.len(),
                });
            }
            for i in 0..dim {
                if p[i] > 0 {
                    let mut q = p.clone();
                    q[i] -= 1;
                    if !points.contains(&q) {
                        return Err(Error::NotDownwardClosed {
                            point: p.clone(),
                            missing: q,
                        });
                    }
                }
            }
        }
        Ok(Self { dim, points })
    }

    /// The cuboid Q_m = { b | b <= m componentwise }.
    pub fn cuboid(m: &[u32]) -> Self {
        let mut points = BTreeSet::new();
        let mut cur = vec![0u32; m.len()];
        loop {
            points.insert(cur.clone());
            // odometer over 0..=m[i]
            let mut i = 0;
            loop {
                if i == m.len() {
                    return Self {
                        dim: m.len(),
                        points,
                    };
                }
                if cur[i] < m[i] {
                    cur[i] += 1;
                    break;
                }
                cur[i] = 0;
                i += 1;
            }
        }
    }

    /// The symmetric simplex Δ_{n,e} = { x in N^{e-1} | x_1+...+x_{e-1} <= n-1 }.
    pub fn simplex(n: u32, e: usize) -> Self {
        assert!(n >= 1 && e >= 2);
        let dim = e - 1;
        let mut points = BTreeSet::new();
        let mut cur = vec![0u32; dim];
        fn rec(cur: &mut Vec<u32>, i: usize, left: u32, out: &mut BTreeSet<Point>) {
            if i == cur.len() {
                out.insert(cur.clone());
                return;
            }
            for v in 0..=left {
                cur[i] = v;
                rec(cur, i + 1, left - v, out);
            }
            cur[i] = 0;
        }
        rec(&mut cur, 0, n - 1, &mut points);
        Self { dim, points }
    }

    /// The double staircase B_n = { x in N^3 | x1+x2+x3 <= n-1, x1*x2 = 0 },
    /// of cardinality n^2.
    pub fn double_staircase(n: u32) -> Self {
        assert!(n >= 1);
        let mut points = BTreeSet::new();
        for x1 in 0..n {
            for x2 in 0..n {
                if x1 != 0 && x2 != 0 {
                    continue;
                }
                for x3 in 0..n - x1 - x2 {
                    points.insert(vec![x1, x2, x3]);
                }
            }
        }
        Self { dim: 3, points }
    }

    /// Downward closure of the union of cuboids over the given corners.
    pub fn from_corners(dim: usize, corners: &[Point]) -> Self {
        assert!(!corners.is_empty());
        let mut points = BTreeSet::new();
        for m in corners {
            assert_eq!(m.len(), dim);
            points.extend(Self::cuboid(m).points);
        }
        Self { dim, points }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: &[u32]) -> bool {
        self.points.contains(p)
    }

    /// Points in LEX order.
    pub fn points(&self) -> impl Iterator<Item = &Point> {
        self.points.iter()
    }

    pub fn points_vec(&self) -> Vec<Point> {
        self.points.iter().cloned().collect()
    }

    /// Maximal points of B under the componentwise order, LEX sorted.
    pub fn max_elements(&self) -> Vec<Point> {
        self.points
            .iter()
            .filter(|p| {
                (0..self.dim).all(|i| {
                    let mut q = (*p).clone();
                    q[i] += 1;
                    !self.points.contains(&q)
                })
            })
            .cloned()
            .collect()
    }

    /// Cohen-Macaulay type of R(B): number of maximal points (socle dimension).
    pub fn type_of(&self) -> usize {
        self.max_elements().len()
    }

    /// B is a cuboid iff it has a single maximal point.
    pub fn is_cuboid(&self) -> bool {
        self.type_of() == 1
    }

    /// Minimal generators of the complement ideal C = N^d \ B: the minimal
    /// points of C, each of the form b + e_i for some b in B.
    pub fn min_generators(&self) -> Vec<Point> {
        let mut candidates: BTreeSet<Point> = BTreeSet::new();
        for p in &self.points {
            for i in 0..self.dim {
                let mut q = p.clone();
                q[i] += 1;
                if !self.points.contains(&q) {
                    candidates.insert(q);
                }
            }
        }
        candidates
            .iter()
            .filter(|c| !candidates.iter().any(|o| *o != **c && le(o, c)))
            .cloned()
            .collect()
    }

    /// Weighted Hilbert function: h_n = #{ b in B | b·γ = n } for an
    /// integer weight vector γ with all entries >= 1.
    pub fn hilbert_function(&self, gamma: &[u64]) -> Vec<u64> {
        assert_eq!(gamma.len(), self.dim);
        assert!(gamma.iter().all(|&g| g >= 1));
        let weights: Vec<u64> = self
            .points
            .iter()
            .map(|p| p.iter().zip(gamma).map(|(&x, &g)| x as u64 * g).sum())
            .collect();
        let m = *weights.iter().max().unwrap() as usize;
        let mut h = vec![0u64; m + 1];
        for w in weights {
            h[w as usize] += 1;
        }
        h
    }

    /// Plain-text coordinate dump, one point per line.
    pub fn coordinate_dump(&self) -> String {
        let mut out = String::new();
        for p in &self.points {
            let coords: Vec<String> = p.iter().map(|c| c.to_string()).collect();
            out.push_str(&coords.join(" "));
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for Staircase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.points.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "(")?;
            for (j, c) in p.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{c}")?;
            }
            write!(f, ")")?;
        }
        write!(f, "}}")
    }
}

/// All downward-closed subsets of N^dim with 1 <= size <= max_size.
/// A dim-d staircase is a nested chain of (d-1)-dimensional layers, so
/// the enumeration recurses on dimension. Deterministic order.
pub fn enumerate_staircases(dim: usize, max_size: usize) -> Vec<Staircase> {
    assert!(dim >= 1);
    let layers = enumerate_point_sets(dim, max_size);
    layers
        .into_iter()
        .map(|points| Staircase {
            dim,
            points: points.into_iter().collect(),
        })
        .collect()
}

fn enumerate_point_sets(dim: usize, max_size: usize) -> Vec<Vec<Point>> {
    if dim == 1 {
        return (1..=max_size)
            .map(|k| (0..k as u32).map(|x| vec![x]).collect())
            .collect();
    }
    let lower = enumerate_point_sets(dim - 1, max_size);
    let lower_sets: Vec<BTreeSet<Point>> = lower
        .iter()
        .map(|pts| pts.iter().cloned().collect())
        .collect();
    let mut out = Vec::new();
    // chain[i] indexes into `lower`; layers must be nested and sizes sum <= max_size
    fn extend(
        lower: &[Vec<Point>],
        lower_sets: &[BTreeSet<Point>],
        chain: &mut Vec<usize>,
        used: usize,
        max_size: usize,
        out: &mut Vec<Vec<Point>>,
    ) {
        if !chain.is_empty() {
            let mut pts = Vec::new();
            for (z, &idx) in chain.iter().enumerate() {
                for p in &lower[idx] {
                    let mut q = p.clone();
                    q.push(z as u32);
                    pts.push(q);
                }
            }
            out.push(pts);
        }
        let prev = chain.last().copied();
        for (idx, layer) in lower.iter().enumerate() {
            let sz = layer.len();
            if used + sz > max_size {
                continue;
            }
            if let Some(pidx) = prev {
                // layer must be contained in the previous one
                if sz > lower[pidx].len()
                    || !layer.iter().all(|p| lower_sets[pidx].contains(p))
                {
                    continue;
                }
            }
            chain.push(idx);
            extend(lower, lower_sets, chain, used + sz, max_size, out);
            chain.pop();
        }
    }
    let mut chain = Vec::new();
    extend(&lower, &lower_sets, &mut chain, 0, max_size, &mut out);
    out.sort_by_key(|pts| (pts.len(), pts.to_vec()));
    out
}

/// The Figure-2 staircase of the running <7,8,12> example; handy in tests.
#[cfg(test)]
pub(crate) fn fig2_staircase() -> Staircase {
    Staircase::new(
        2,
        vec![
            vec![0, 0],
            vec![1, 0],
            vec![2, 0],
            vec![0, 1],
            vec![1, 1],
            vec![0, 2],
            vec![1, 2],
        ],
    )
    .unwrap()
}
