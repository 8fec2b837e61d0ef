//! The generalized Wilf ratio w(γ, B) with exact rational weights, its
//! bounds, and the bounded counterexample search for the closing
//! question.

use num_integer::Integer;
use num_traits::Signed;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lift::{lex_min_lift, LiftData};
use crate::semigroup::NumericalSemigroup;
use crate::staircase::{enumerate_staircases, Point, Staircase};
use crate::tessellation::search_tessellation_hnf;
use crate::weights::{rat, Rat, WeightVector};

/// Strip counts and the exact ratio w(γ, B) = u / d.
#[derive(Debug, Clone, Serialize)]
pub struct RatioReport {
    pub n0: u64,
    pub h: Vec<u64>,
    pub h_prime: Vec<u64>,
    pub d: u64,
    pub u: u64,
    pub ratio: Rat,
    /// 1 / t(R(B))
    pub type_bound: Rat,
    /// 1 / (e - 1)
    pub wilf_bound: Rat,
}

fn floor_u64(r: Rat) -> u64 {
    debug_assert!(!r.is_negative());
    r.floor().to_integer() as u64
}

/// Computes w(γ, B) along both routes: the weighted story sums over the
/// strips H_n and H'_n, and the floor-sum formula
/// d = Σ ⌊b·γ⌋, u = Σ ⌊max(B·γ) - b·γ⌋. They must agree.
pub fn wilf_ratio(gamma: &WeightVector, b: &Staircase) -> Result<RatioReport> {
    if gamma.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            expected: b.dim(),
            got: gamma.dim(),
        });
    }
    if !gamma.is_sorted_ge_one() {
        return Err(Error::WeightOrderViolation);
    }
    let weights: Vec<Rat> = b.points().map(|p| gamma.dot(p)).collect();
    let wmax = weights.iter().max().cloned().unwrap();
    let n0 = floor_u64(wmax);

    let mut h = vec![0u64; n0 as usize + 1];
    let mut h_prime = vec![0u64; n0 as usize + 1];
    let mut d = 0u64;
    let mut u = 0u64;
    for w in &weights {
        let fw = floor_u64(*w);
        let fu = floor_u64(wmax - w);
        h[fw as usize] += 1;
        h_prime[(n0 - fu) as usize] += 1;
        d += fw;
        u += fu;
    }
    // cross-check: weighted story sums reproduce the floor sums
    let d_stories: u64 = h.iter().enumerate().map(|(n, &x)| n as u64 * x).sum();
    let u_stories: u64 = h_prime
        .iter()
        .enumerate()
        .map(|(n, &x)| (n0 - n as u64) * x)
        .sum();
    assert_eq!(d, d_stories);
    assert_eq!(u, u_stories);

    if d == 0 {
        return Err(Error::DegenerateDenominator);
    }
    let e = b.dim() as i64 + 1;
    Ok(RatioReport {
        n0,
        h,
        h_prime,
        d,
        u,
        ratio: rat(u as i64, d as i64),
        type_bound: rat(1, b.type_of() as i64),
        wilf_bound: rat(1, e - 1),
    })
}

/// The translation lemma w(S) = w(γ, Ã) with γ = g / g0, evaluated along
/// both routes; the strip counts must agree level by level.
pub fn semigroup_ratio_bridge(s: &NumericalSemigroup) -> Result<(Rat, Rat)> {
    let lift = lex_min_lift(s)?;
    ratio_bridge_with(s, &lift)
}

/// Same as [`semigroup_ratio_bridge`], reusing an already computed lift.
pub fn ratio_bridge_with(s: &NumericalSemigroup, lift: &LiftData) -> Result<(Rat, Rat)> {
    let stories = lift.stories();

    let g0 = s.multiplicity() as i64;
    let gamma = WeightVector::new(
        s.generators()[1..]
            .iter()
            .map(|&g| rat(g as i64, g0))
            .collect(),
    )?;
    let report = wilf_ratio(&gamma, &lift.tilde_a)?;

    assert_eq!(stories.n0, report.n0);
    assert_eq!(stories.h, report.h);
    assert_eq!(stories.h_prime, report.h_prime);
    // c + g0 - 1 = g0 * max(Ã·γ)
    let wmax = lift
        .tilde_a
        .points()
        .map(|p| gamma.dot(p))
        .max()
        .unwrap();
    assert_eq!(
        Rat::from((s.conductor() + s.multiplicity() - 1) as i64),
        Rat::from(g0) * wmax
    );
    Ok((stories.wilf_ratio, report.ratio))
}

/// w(γ, B) >= 1 / t(R(B)).
pub fn check_type_bound(gamma: &WeightVector, b: &Staircase) -> Result<bool> {
    let r = wilf_ratio(gamma, b)?;
    Ok(r.ratio >= r.type_bound)
}

/// For integer γ with entries >= 1: w(γ, B) >= 1 / (e - 1).
pub fn check_integer_gamma_bound(gamma: &WeightVector, b: &Staircase) -> Result<bool> {
    if !gamma.is_integral() {
        return Err(Error::PreconditionFailed("gamma must be integral"));
    }
    let r = wilf_ratio(gamma, b)?;
    Ok(r.ratio >= r.wilf_bound)
}

/// Eliahou's inequalities n h_n <= h_1 (h_0 + ... + h_{n-1}) for a
/// standard-graded Hilbert function. When they hold together with
/// h_1 <= e - 1, their sum gives the Wilf-type inequality, which is
/// asserted as a numeric cross-check.
pub fn eliahou_check(h: &[u64], e: usize) -> bool {
    let mut prefix = 0u64;
    let h1 = if h.len() > 1 { h[1] } else { 0 };
    let mut all_hold = true;
    for (n, &hn) in h.iter().enumerate() {
        if n >= 1 && (n as u64) * hn > h1 * prefix {
            all_hold = false;
        }
        prefix += hn;
    }
    if all_hold && h1 < e as u64 {
        let m = h.len() as u64 - 1;
        let lhs: u64 = h.iter().enumerate().map(|(n, &x)| n as u64 * x).sum();
        let rhs: u64 = h
            .iter()
            .enumerate()
            .map(|(n, &x)| (m - n as u64) * x)
            .sum();
        assert!(lhs <= (e as u64 - 1) * rhs, "summed Eliahou must give (elf)");
    }
    all_hold
}

/// Bounds for the counterexample search.
#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub dim: usize,
    pub max_size: usize,
    pub max_denom: i64,
    /// entries bounded by this integer
    pub gamma_max: i64,
    pub budget: u64,
    pub integer_gamma_only: bool,
    pub require_tessellation: bool,
    pub require_common_denominator: bool,
    pub tessellation_budget: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            dim: 2,
            max_size: 6,
            max_denom: 6,
            gamma_max: 3,
            budget: 1_000_000,
            integer_gamma_only: false,
            require_tessellation: false,
            require_common_denominator: false,
            tessellation_budget: 1_000_000,
        }
    }
}

/// A pair with w(γ, B) < 1/(e-1).
#[derive(Debug, Clone, Serialize)]
pub struct Hit {
    /// (staircase index, gamma index) in the deterministic enumeration
    pub key: (usize, usize),
    pub gamma: Vec<Rat>,
    pub points: Vec<Point>,
    pub d: u64,
    pub u: u64,
    pub ratio: Rat,
    pub tessellates: bool,
    pub common_denominator: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchSummary {
    pub examined: u64,
    pub hits: u64,
    pub last_key: Option<(usize, usize)>,
}

/// Weight vectors 1 <= γ_1 <= ... <= γ_d <= gamma_max with denominators
/// up to max_denom, ordered by (common denominator, numerator tuple LEX).
pub fn enumerate_gammas(
    dim: usize,
    max_denom: i64,
    gamma_max: i64,
    integer_only: bool,
) -> Vec<Vec<Rat>> {
    let max_q = if integer_only { 1 } else { max_denom };
    let mut out = Vec::new();
    for q in 1..=max_q {
        let mut nums = vec![q; dim];
        'tuples: loop {
            let gamma: Vec<Rat> = nums.iter().map(|&p| rat(p, q)).collect();
            // emit only at the reduced common denominator
            let lcm = gamma
                .iter()
                .fold(1i64, |acc, g| acc.lcm(g.denom()));
            if lcm == q {
                out.push(gamma);
            }
            // next weakly increasing tuple with entries in [q, q*gamma_max]
            let mut i = dim;
            loop {
                if i == 0 {
                    break 'tuples;
                }
                i -= 1;
                if nums[i] < q * gamma_max {
                    nums[i] += 1;
                    for j in i + 1..dim {
                        nums[j] = nums[i];
                    }
                    break;
                }
            }
        }
    }
    out
}

fn tessellates(b: &Staircase, budget: u64) -> Result<bool> {
    Ok(match b.dim() {
        1 => true,
        2 => b.type_of() <= 2,
        _ => search_tessellation_hnf(b, budget)?.is_some(),
    })
}

/// Enumerates (γ, B) pairs within the configured bounds and emits every
/// pair whose ratio falls below 1/(e-1), in deterministic order.
/// `resume_after` skips every enumeration key up to and including it.
pub fn search_counterexamples(
    cfg: &SearchConfig,
    resume_after: Option<(usize, usize)>,
    mut emit: impl FnMut(&Hit),
) -> Result<SearchSummary> {
    let staircases = enumerate_staircases(cfg.dim, cfg.max_size);
    let gammas = enumerate_gammas(cfg.dim, cfg.max_denom, cfg.gamma_max, cfg.integer_gamma_only);
    let wilf_bound = rat(1, cfg.dim as i64);

    let mut examined = 0u64;
    let mut hits = 0u64;
    let mut last_key = None;
    for (ib, b) in staircases.iter().enumerate() {
        if b.len() == 1 {
            // B = {0} has no floor mass; excluded by the standing hypothesis
            continue;
        }
        let b_tessellates = tessellates(b, cfg.tessellation_budget)?;
        if cfg.require_tessellation && !b_tessellates {
            continue;
        }
        let size = b.len() as i64;
        for (ig, gamma) in gammas.iter().enumerate() {
            let key = (ib, ig);
            if let Some(after) = resume_after {
                if key <= after {
                    continue;
                }
            }
            let common_denominator = gamma.iter().all(|g| size % g.denom() == 0);
            if cfg.require_common_denominator && !common_denominator {
                continue;
            }
            examined += 1;
            if examined > cfg.budget {
                return Err(Error::SearchBudgetExceeded {
                    budget: cfg.budget,
                    examined,
                });
            }
            let wv = WeightVector::new(gamma.clone())?;
            let report = wilf_ratio(&wv, b)?;
            last_key = Some(key);
            if report.ratio < wilf_bound {
                hits += 1;
                emit(&Hit {
                    key,
                    gamma: gamma.clone(),
                    points: b.points_vec(),
                    d: report.d,
                    u: report.u,
                    ratio: report.ratio,
                    tessellates: b_tessellates,
                    common_denominator,
                });
            }
        }
    }
    Ok(SearchSummary {
        examined,
        hits,
        last_key,
    })
}
