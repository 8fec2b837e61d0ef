//! Numerical semigroups: validation, Apéry sets, conductor, gaps, type.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A numerical semigroup given by its minimal generating set
/// `g0 < g1 < ... < g_{e-1}` with gcd 1. The Apéry set with respect to
/// the multiplicity `g0` is computed once at construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NumericalSemigroup {
    generators: Vec<u64>,
    apery: AperyData,
}

/// The Apéry set of `S` with respect to `g0`, indexed by residue class:
/// `apery[r]` is the least element of `S` congruent to `r` mod `g0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AperyData {
    pub g0: u64,
    pub apery: Vec<u64>,
    pub conductor: u64,
}

impl AperyData {
    pub fn max(&self) -> u64 {
        *self.apery.iter().max().expect("apery set is nonempty")
    }

    pub fn sum(&self) -> u128 {
        self.apery.iter().map(|&a| a as u128).sum()
    }
}

/// True if `target` is a nonnegative integer combination of `gens`.
/// Plain DP table up to `target`; used for minimalization and as the
/// brute-force membership oracle in tests.
pub fn representable(target: u64, gens: &[u64]) -> bool {
    if target == 0 {
        return true;
    }
    if gens.is_empty() {
        return false;
    }
    let t = target as usize;
    let mut reach = vec![false; t + 1];
    reach[0] = true;
    for v in 1..=t {
        for &g in gens {
            let g = g as usize;
            if g <= v && reach[v - g] {
                reach[v] = true;
                break;
            }
        }
    }
    reach[t]
}

impl NumericalSemigroup {
    /// Builds a semigroup from any positive generating list with gcd 1.
    /// Redundant generators are stripped, not rejected.
    pub fn new(generators: &[u64]) -> Result<Self> {
        Self::new_reporting(generators).map(|(s, _)| s)
    }

    /// Like [`NumericalSemigroup::new`], additionally reporting which
    /// input generators were redundant and got removed.
    pub fn new_reporting(generators: &[u64]) -> Result<(Self, Vec<u64>)> {
        if generators.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if generators.contains(&0) {
            return Err(Error::ZeroGenerator);
        }
        let mut sorted: Vec<u64> = generators.to_vec();
        sorted.sort_unstable();
        sorted.dedup();

        let gcd = sorted.iter().fold(0u64, |acc, &g| acc.gcd(&g));
        if gcd != 1 {
            return Err(Error::GcdNotOne(gcd));
        }

        // Reduce to the (unique) minimal generating set: a generator is
        // redundant iff it is representable over the smaller kept ones.
        let mut kept: Vec<u64> = Vec::new();
        let mut redundant: Vec<u64> = Vec::new();
        for &g in &sorted {
            if representable(g, &kept) {
                redundant.push(g);
            } else {
                kept.push(g);
            }
        }

        if kept[0] == 1 {
            return Err(Error::TrivialSemigroup);
        }
        let apery = compute_apery(&kept)?;
        Ok((
            Self {
                generators: kept,
                apery,
            },
            redundant,
        ))
    }

    /// Internal constructor for the Kunz-coordinate enumerator, which has
    /// already derived a minimal generating set and the Apéry values.
    pub(crate) fn from_parts(generators: Vec<u64>, apery: AperyData) -> Self {
        debug_assert_eq!(apery.apery.len() as u64, apery.g0);
        debug_assert_eq!(generators[0], apery.g0);
        Self { generators, apery }
    }

    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    /// The multiplicity g0, smallest nonzero element of S.
    pub fn multiplicity(&self) -> u64 {
        self.generators[0]
    }

    /// Embedding dimension e.
    pub fn embedding_dimension(&self) -> usize {
        self.generators.len()
    }

    pub fn apery(&self) -> &AperyData {
        &self.apery
    }

    pub fn conductor(&self) -> u64 {
        self.apery.conductor
    }

    /// Frobenius number c - 1 (largest gap).
    pub fn frobenius(&self) -> i64 {
        self.apery.conductor as i64 - 1
    }

    /// Membership test via the Apéry set: n is in S iff n >= apery[n mod g0].
    pub fn contains(&self, n: i64) -> bool {
        if n < 0 {
            return false;
        }
        let n = n as u64;
        if n >= self.apery.conductor {
            return true;
        }
        let r = (n % self.apery.g0) as usize;
        n >= self.apery.apery[r]
    }

    /// L = S ∩ {0, ..., c-1}, ascending.
    pub fn left_part(&self) -> Vec<u64> {
        (0..self.apery.conductor)
            .filter(|&n| self.contains(n as i64))
            .collect()
    }

    /// The gaps N \ S, ascending; their count is the genus.
    pub fn gaps(&self) -> Vec<u64> {
        (0..self.apery.conductor)
            .filter(|&n| !self.contains(n as i64))
            .collect()
    }

    pub fn genus(&self) -> u64 {
        self.apery.conductor - self.left_count()
    }

    pub fn left_count(&self) -> u64 {
        self.left_part().len() as u64
    }

    /// #L via the Apéry-set formula (1/g0) Σ_{a∈A} (c-a) + (g0-1)/2,
    /// evaluated exactly. A non-integer value can only mean a bug.
    pub fn left_count_formula(&self) -> Result<u64> {
        let g0 = self.apery.g0 as i128;
        let c = self.apery.conductor as i128;
        let sum: i128 = self.apery.apery.iter().map(|&a| c - a as i128).sum();
        // (sum/g0 + (g0-1)/2) as one fraction over 2*g0.
        let num = 2 * sum + g0 * (g0 - 1);
        let den = 2 * g0;
        if num % den != 0 || num < 0 {
            return Err(Error::NonIntegerResult);
        }
        Ok((num / den) as u64)
    }

    /// Pseudo-Frobenius numbers: gaps f with f + (S \ {0}) ⊆ S. It
    /// suffices to test f + g_i for the generators.
    pub fn pseudo_frobenius(&self) -> Vec<u64> {
        self.gaps()
            .into_iter()
            .filter(|&f| {
                self.generators
                    .iter()
                    .all(|&g| self.contains((f + g) as i64))
            })
            .collect()
    }

    /// Cohen-Macaulay type t(S) = number of pseudo-Frobenius numbers.
    pub fn type_of(&self) -> usize {
        self.pseudo_frobenius().len()
    }

    /// S is symmetric iff 2 #L = c (equivalently, type 1).
    pub fn is_symmetric(&self) -> bool {
        2 * self.left_count() == self.apery.conductor
    }

    /// The unique presentation s = a0*g0 + a with a in A, for s in S.
    /// Returns None for s outside S.
    pub fn decompose(&self, s: u64) -> Option<(u64, u64)> {
        if !self.contains(s as i64) {
            return None;
        }
        let a = self.apery.apery[(s % self.apery.g0) as usize];
        Some(((s - a) / self.apery.g0, a))
    }
}

/// Single-source shortest path on the residue graph mod g0 with edge
/// weights g1, ..., g_{e-1} (the circle-of-lights view of the Apéry set).
fn compute_apery(generators: &[u64]) -> Result<AperyData> {
    let g0 = generators[0];
    let n = g0 as usize;
    let mut dist: Vec<u64> = vec![u64::MAX; n];
    dist[0] = 0;
    let mut heap: BinaryHeap<Reverse<(u64, usize)>> = BinaryHeap::new();
    heap.push(Reverse((0, 0)));
    while let Some(Reverse((d, r))) = heap.pop() {
        if d > dist[r] {
            continue;
        }
        for &g in &generators[1..] {
            let nd = d
                .checked_add(g)
                .ok_or(Error::ArithmeticOverflow("apery shortest path"))?;
            let nr = ((r as u64 + g) % g0) as usize;
            if nd < dist[nr] {
                dist[nr] = nd;
                heap.push(Reverse((nd, nr)));
            }
        }
    }
    // gcd 1 guarantees every residue is reached
    debug_assert!(dist.iter().all(|&d| d != u64::MAX));
    let max = *dist.iter().max().unwrap();
    Ok(AperyData {
        g0,
        apery: dist,
        conductor: max + 1 - g0,
    })
}

impl FromStr for NumericalSemigroup {
    type Err = Error;

    /// Parses "<g0,g1,...>" or a bare "g0,g1,..." list.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s
            .trim()
            .trim_start_matches(['<', '⟨'])
            .trim_end_matches(['>', '⟩']);
        let gens: Vec<u64> = trimmed
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u64>()
                    .map_err(|e| Error::Parse(format!("bad generator {t:?}: {e}")))
            })
            .collect::<Result<_>>()?;
        NumericalSemigroup::new(&gens)
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}

/// Parses a semigroup from a JSON array of generators.
pub fn from_json_array(json: &str) -> Result<NumericalSemigroup> {
    let gens: Vec<u64> =
        serde_json::from_str(json).map_err(|e| Error::Parse(e.to_string()))?;
    NumericalSemigroup::new(&gens)
}
