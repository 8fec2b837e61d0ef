//! Full-rank sublattices of Z^d in Hermite normal form, kernel lattices
//! of semigroup lifts, tessellation verification and search.

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;
use crate::staircase::{Point, Staircase};

/// A full-rank sublattice of Z^dim. The stored basis is the row-style
/// Hermite normal form: lower triangular, positive diagonal, and
/// 0 <= H[i][j] < H[j][j] for j < i. Equal lattices compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Lattice {
    dim: usize,
    basis: Vec<Vec<i64>>,
}

/// Reduces generating rows to the lower-triangular row HNF described on
/// [`Lattice`]. Accepts any number of generators; they must span a
/// full-rank lattice.
fn hnf_rows(mut rows: Vec<Vec<i64>>, dim: usize) -> Result<Vec<Vec<i64>>> {
    for r in &rows {
        if r.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: r.len(),
            });
        }
    }
    let mut pivots: Vec<Option<Vec<i64>>> = vec![None; dim];
    for col in (0..dim).rev() {
        loop {
            let p = rows
                .iter()
                .enumerate()
                .filter(|(_, r)| r[col] != 0)
                .min_by_key(|(_, r)| r[col].unsigned_abs());
            let Some((p, _)) = p else { break };
            let pivot_row = rows[p].clone();
            let mut all_zero = true;
            for (q, row) in rows.iter_mut().enumerate() {
                if q == p || row[col] == 0 {
                    continue;
                }
                let k = row[col] / pivot_row[col];
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= k * y;
                }
                if row[col] != 0 {
                    all_zero = false;
                }
            }
            if all_zero {
                pivots[col] = Some(rows.swap_remove(p));
                break;
            }
        }
    }
    if rows.iter().any(|r| r.iter().any(|&x| x != 0)) || pivots.iter().any(|p| p.is_none()) {
        return Err(Error::SingularLattice);
    }
    let mut h: Vec<Vec<i64>> = pivots.into_iter().map(|p| p.unwrap()).collect();
    for (i, row) in h.iter_mut().enumerate() {
        if row[i] < 0 {
            for x in row.iter_mut() {
                *x = -*x;
            }
        }
    }
    // reduce entries below the diagonal into [0, H[j][j])
    for i in 0..dim {
        for j in (0..i).rev() {
            let q = h[i][j].div_euclid(h[j][j]);
            if q != 0 {
                let row_j = h[j].clone();
                for (x, y) in h[i].iter_mut().zip(&row_j) {
                    *x -= q * y;
                }
            }
        }
    }
    Ok(h)
}

impl Lattice {
    pub fn from_rows(dim: usize, rows: Vec<Vec<i64>>) -> Result<Self> {
        Ok(Self {
            dim,
            basis: hnf_rows(rows, dim)?,
        })
    }

    /// Builds from rows that are already in the HNF shape; checked in
    /// debug builds only.
    fn from_hnf_unchecked(dim: usize, basis: Vec<Vec<i64>>) -> Self {
        debug_assert_eq!(hnf_rows(basis.clone(), dim).as_ref(), Ok(&basis));
        Self { dim, basis }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis(&self) -> &[Vec<i64>] {
        &self.basis
    }

    pub fn det_abs(&self) -> u64 {
        self.basis
            .iter()
            .enumerate()
            .map(|(i, r)| r[i] as u64)
            .product()
    }

    /// Canonical residue of x modulo the lattice, by back substitution
    /// along the triangular basis.
    pub fn reduce(&self, x: &[i64]) -> Vec<i64> {
        assert_eq!(x.len(), self.dim);
        let mut r = x.to_vec();
        for i in (0..self.dim).rev() {
            let q = r[i].div_euclid(self.basis[i][i]);
            if q != 0 {
                for (a, b) in r.iter_mut().zip(&self.basis[i]) {
                    *a -= q * b;
                }
            }
        }
        r
    }

    pub fn contains(&self, x: &[i64]) -> bool {
        self.reduce(x).iter().all(|&v| v == 0)
    }
}

impl fmt::Display for Lattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.basis.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "Z*(")?;
            for (j, v) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// The kernel lattice Λ = { x in Z^{e-1} | x·g ≡ 0 mod g0 }, computed by
/// unimodular column reduction of (g_1, ..., g_{e-1}, g0) and projecting
/// the kernel back to the first e-1 coordinates.
pub fn kernel_lattice(s: &NumericalSemigroup) -> Lattice {
    let g0 = s.multiplicity() as i64;
    let w: Vec<i64> = s.generators()[1..].iter().map(|&g| g as i64).collect();
    let d = w.len();
    let mut a: Vec<i64> = w.iter().copied().chain(std::iter::once(g0)).collect();
    let mut u: Vec<Vec<i64>> = (0..d + 1)
        .map(|j| (0..d + 1).map(|i| i64::from(i == j)).collect())
        .collect();
    loop {
        let nonzero: Vec<usize> = (0..d + 1).filter(|&j| a[j] != 0).collect();
        if nonzero.len() <= 1 {
            break;
        }
        let p = *nonzero
            .iter()
            .min_by_key(|&&j| a[j].unsigned_abs())
            .unwrap();
        for &j in &nonzero {
            if j == p {
                continue;
            }
            let q = a[j] / a[p];
            a[j] -= q * a[p];
            let up = u[p].clone();
            for (x, y) in u[j].iter_mut().zip(&up) {
                *x -= q * y;
            }
        }
    }
    let p = (0..d + 1).find(|&j| a[j] != 0).expect("gcd is 1");
    debug_assert_eq!(a[p].unsigned_abs(), 1);
    let rows: Vec<Vec<i64>> = (0..d + 1)
        .filter(|&j| j != p)
        .map(|j| u[j][..d].to_vec())
        .collect();
    let lat = Lattice::from_rows(d, rows).expect("kernel lattice has full rank");
    debug_assert_eq!(lat.det_abs(), s.multiplicity());
    lat
}

/// B tessellates Z^d by L iff |det L| = #B and the residues of B modulo
/// L are pairwise distinct.
pub fn verify_tessellation(b: &Staircase, l: &Lattice) -> Result<bool> {
    if b.dim() != l.dim() {
        return Err(Error::DimensionMismatch {
            expected: b.dim(),
            got: l.dim(),
        });
    }
    if l.det_abs() != b.len() as u64 {
        return Ok(false);
    }
    let mut seen = HashSet::with_capacity(b.len());
    for p in b.points() {
        let x: Vec<i64> = p.iter().map(|&c| c as i64).collect();
        if !seen.insert(l.reduce(&x)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Searches for a tessellating lattice. In dimension 2 the answer is
/// constructive: a lattice exists iff t(R(B)) <= 2, and the two-maxima
/// case has an explicit basis. Other dimensions fall back to exhaustive
/// HNF enumeration under a candidate budget.
pub fn find_tessellation(b: &Staircase, budget: u64) -> Result<Option<Lattice>> {
    match b.dim() {
        1 => {
            let n = b.len() as i64;
            Ok(Some(Lattice::from_hnf_unchecked(1, vec![vec![n]])))
        }
        2 => {
            let maxima = b.max_elements();
            let lat = match maxima.as_slice() {
                [m] => Lattice::from_rows(
                    2,
                    vec![
                        vec![m[0] as i64 + 1, 0],
                        vec![0, m[1] as i64 + 1],
                    ],
                )?,
                [m1, m2] => {
                    // LEX order gives x1 < x2 and, by incomparability, y1 > y2
                    let (x1, y1) = (m1[0] as i64, m1[1] as i64);
                    let (x2, y2) = (m2[0] as i64, m2[1] as i64);
                    debug_assert!(x1 < x2 && y1 > y2);
                    Lattice::from_rows(
                        2,
                        vec![vec![x1 + 1, y2 + 1], vec![-x2 - 1, y1 - y2]],
                    )?
                }
                _ => return Ok(None),
            };
            debug_assert_eq!(verify_tessellation(b, &lat), Ok(true));
            Ok(Some(lat))
        }
        _ => search_tessellation_hnf(b, budget),
    }
}

/// Exhaustive search over all HNF matrices of determinant #B, in
/// lexicographic order of (diagonal, below-diagonal entries). Serves as
/// the brute-force oracle for the constructive dimension-2 result.
pub fn search_tessellation_hnf(b: &Staircase, budget: u64) -> Result<Option<Lattice>> {
    let dim = b.dim();
    let n = b.len() as i64;
    let mut examined = 0u64;
    let mut diag = vec![0i64; dim];
    search_diag(b, n, 0, &mut diag, budget, &mut examined)
}

fn search_diag(
    b: &Staircase,
    remaining: i64,
    i: usize,
    diag: &mut Vec<i64>,
    budget: u64,
    examined: &mut u64,
) -> Result<Option<Lattice>> {
    let dim = b.dim();
    if i == dim {
        if remaining != 1 {
            return Ok(None);
        }
        return search_offdiag(b, diag, budget, examined);
    }
    for d in 1..=remaining {
        if remaining % d != 0 {
            continue;
        }
        diag[i] = d;
        if let Some(hit) = search_diag(b, remaining / d, i + 1, diag, budget, examined)? {
            return Ok(Some(hit));
        }
    }
    Ok(None)
}

fn search_offdiag(
    b: &Staircase,
    diag: &[i64],
    budget: u64,
    examined: &mut u64,
) -> Result<Option<Lattice>> {
    let dim = b.dim();
    // below-diagonal positions in row-major order
    let slots: Vec<(usize, usize)> = (0..dim)
        .flat_map(|i| (0..i).map(move |j| (i, j)))
        .collect();
    let mut entries = vec![0i64; slots.len()];
    loop {
        *examined += 1;
        if *examined > budget {
            return Err(Error::SearchBudgetExceeded {
                budget,
                examined: *examined,
            });
        }
        let mut basis: Vec<Vec<i64>> = (0..dim)
            .map(|i| {
                let mut row = vec![0i64; dim];
                row[i] = diag[i];
                row
            })
            .collect();
        for (&(i, j), &v) in slots.iter().zip(&entries) {
            basis[i][j] = v;
        }
        let lat = Lattice::from_hnf_unchecked(dim, basis);
        if verify_tessellation(b, &lat)? {
            return Ok(Some(lat));
        }
        // odometer over entries, slot k ranges over 0..diag[slots[k].1]
        let mut k = 0;
        loop {
            if k == slots.len() {
                return Ok(None);
            }
            if entries[k] + 1 < diag[slots[k].1] {
                entries[k] += 1;
                break;
            }
            entries[k] = 0;
            k += 1;
        }
    }
}

/// Structural report for a certified tessellation (B, Λ): no two
/// distinct minimal generators of C with overlapping support differ by
/// a lattice vector, and at most one minimal generator has full
/// support, which then lies in Λ.
#[derive(Debug, Clone, Serialize)]
pub struct Prop28Report {
    pub pairwise_ok: bool,
    pub off_axis_generators: Vec<Point>,
    pub off_axis_in_lattice: bool,
}

impl Prop28Report {
    pub fn holds(&self) -> bool {
        self.pairwise_ok && self.off_axis_generators.len() <= 1 && self.off_axis_in_lattice
    }
}

pub fn prop_2_8_check(b: &Staircase, l: &Lattice) -> Result<Prop28Report> {
    if !verify_tessellation(b, l)? {
        return Err(Error::PreconditionFailed("(B, L) is not a tessellation"));
    }
    let gens = b.min_generators();
    let as_i64 = |p: &Point| p.iter().map(|&c| c as i64).collect::<Vec<_>>();
    let supp = |p: &Point| {
        p.iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(i, _)| i)
            .collect::<Vec<_>>()
    };
    let mut pairwise_ok = true;
    for (i, x) in gens.iter().enumerate() {
        for y in &gens[i + 1..] {
            let sx = supp(x);
            if supp(y).iter().any(|j| sx.contains(j)) {
                let diff: Vec<i64> = as_i64(x)
                    .iter()
                    .zip(as_i64(y))
                    .map(|(a, b)| a - b)
                    .collect();
                if l.contains(&diff) {
                    pairwise_ok = false;
                }
            }
        }
    }
    let off_axis: Vec<Point> = gens
        .iter()
        .filter(|g| g.iter().all(|&c| c > 0))
        .cloned()
        .collect();
    let off_axis_in_lattice = off_axis.iter().all(|g| l.contains(&as_i64(g)));
    Ok(Prop28Report {
        pairwise_ok,
        off_axis_generators: off_axis,
        off_axis_in_lattice,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lift::lex_min_lift;
    use crate::staircase::enumerate_staircases;

    fn s(gens: &[u64]) -> NumericalSemigroup {
        NumericalSemigroup::new(gens).unwrap()
    }

    #[test]
    fn hnf_canonicalizes_paper_basis() {
        let l1 = Lattice::from_rows(2, vec![vec![2, 1], vec![-3, 2]]).unwrap();
        let l2 = Lattice::from_rows(2, vec![vec![-3, 2], vec![2, 1]]).unwrap();
        assert_eq!(l1, l2);
        assert_eq!(l1.det_abs(), 7);
        assert_eq!(l1.basis(), &[vec![7, 0], vec![2, 1]]);
    }

    #[test]
    fn hnf_rejects_singular() {
        assert_eq!(
            Lattice::from_rows(2, vec![vec![1, 2], vec![2, 4]]).unwrap_err(),
            Error::SingularLattice
        );
    }

    #[test]
    fn kernel_lattice_examples() {
        let l = kernel_lattice(&s(&[7, 8, 12]));
        let expected = Lattice::from_rows(2, vec![vec![2, 1], vec![-3, 2]]).unwrap();
        assert_eq!(l, expected);

        let l = kernel_lattice(&s(&[9, 10, 12, 13]));
        let expected = Lattice::from_rows(
            3,
            vec![vec![0, 3, 0], vec![3, -1, 0], vec![1, 1, -1]],
        )
        .unwrap();
        assert_eq!(l, expected);

        let l = kernel_lattice(&s(&[2, 3]));
        assert_eq!(l.basis(), &[vec![2]]);
    }

    #[test]
    fn lattice_membership_matches_brute_force() {
        let l = kernel_lattice(&s(&[7, 8, 12]));
        for x in -10i64..10 {
            for y in -10i64..10 {
                // brute force: x*(2,1) + y*(-3,2) over small coefficients
                let member = 8 * x + 12 * y;
                assert_eq!(l.contains(&[x, y]), member.rem_euclid(7) == 0);
            }
        }
    }

    #[test]
    fn tessellation_examples() {
        let lift = lex_min_lift(&s(&[7, 8, 12])).unwrap();
        let l = kernel_lattice(&s(&[7, 8, 12]));
        assert_eq!(verify_tessellation(&lift.tilde_a, &l), Ok(true));

        let square = Staircase::cuboid(&[1, 1]);
        let l = Lattice::from_rows(2, vec![vec![2, 0], vec![0, 2]]).unwrap();
        assert_eq!(verify_tessellation(&square, &l), Ok(true));

        // no index-6 sublattice tessellates the 3-simplex
        let simplex = Staircase::simplex(3, 3);
        assert_eq!(search_tessellation_hnf(&simplex, 10_000).unwrap(), None);
        assert_eq!(find_tessellation(&simplex, 10_000).unwrap(), None);
    }

    #[test]
    fn constructive_dim2_reproduces_paper_lattice() {
        let lift = lex_min_lift(&s(&[7, 8, 12])).unwrap();
        let found = find_tessellation(&lift.tilde_a, 10_000).unwrap().unwrap();
        assert_eq!(found, kernel_lattice(&s(&[7, 8, 12])));
    }

    #[test]
    fn double_staircase_tessellates() {
        let b = Staircase::double_staircase(3);
        let l = kernel_lattice(&s(&[9, 10, 12, 13]));
        assert_eq!(verify_tessellation(&b, &l), Ok(true));
        // exhaustive search also finds some lattice of det 9
        let found = search_tessellation_hnf(&b, 1_000_000).unwrap().unwrap();
        assert_eq!(found.det_abs(), 9);
    }

    #[test]
    fn kernel_tessellates_for_every_tested_semigroup() {
        for gens in [
            vec![7, 8, 12],
            vec![6, 7, 9],
            vec![14, 15, 17],
            vec![9, 10, 12, 13],
            vec![9, 20, 21, 23],
            vec![2, 3],
            vec![5, 7, 9, 11, 13],
        ] {
            let sg = s(&gens);
            let lift = lex_min_lift(&sg).unwrap();
            let l = kernel_lattice(&sg);
            assert_eq!(verify_tessellation(&lift.tilde_a, &l), Ok(true), "{gens:?}");
        }
    }

    #[test]
    fn corollary_2_9_small_exhaustive() {
        for b in enumerate_staircases(2, 10) {
            let found = find_tessellation(&b, 100_000).unwrap();
            let oracle = search_tessellation_hnf(&b, 100_000).unwrap();
            assert_eq!(found.is_some(), b.type_of() <= 2, "{b}");
            assert_eq!(oracle.is_some(), found.is_some(), "{b}");
            if let Some(l) = &found {
                assert_eq!(verify_tessellation(&b, l), Ok(true));
            }
        }
    }

    #[test]
    fn prop_2_8_examples() {
        let lift = lex_min_lift(&s(&[7, 8, 12])).unwrap();
        let l = kernel_lattice(&s(&[7, 8, 12]));
        let r = prop_2_8_check(&lift.tilde_a, &l).unwrap();
        assert!(r.holds());
        assert_eq!(r.off_axis_generators, vec![vec![2, 1]]);
        assert!(l.contains(&[2, 1]));

        let square = Staircase::cuboid(&[1, 1]);
        let two_z2 = Lattice::from_rows(2, vec![vec![2, 0], vec![0, 2]]).unwrap();
        let r = prop_2_8_check(&square, &two_z2).unwrap();
        assert!(r.holds());
        assert!(r.off_axis_generators.is_empty());

        let lift = lex_min_lift(&s(&[9, 10, 12, 13])).unwrap();
        let l = kernel_lattice(&s(&[9, 10, 12, 13]));
        assert!(prop_2_8_check(&lift.tilde_a, &l).unwrap().holds());

        // precondition failure
        let bad = Lattice::from_rows(2, vec![vec![3, 0], vec![0, 3]]).unwrap();
        assert!(matches!(
            prop_2_8_check(&square, &bad),
            Err(Error::PreconditionFailed(_))
        ));
    }

    #[test]
    fn search_budget_is_enforced() {
        let b = Staircase::simplex(4, 4);
        assert!(matches!(
            search_tessellation_hnf(&b, 3),
            Err(Error::SearchBudgetExceeded { budget: 3, .. })
        ));
    }
}
