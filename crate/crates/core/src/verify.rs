//! Per-semigroup battery of the identities and bounds the library
//! implements, used by the enumeration driver and the acceptance suite.

use serde::Serialize;

use crate::lift::{lex_min_lift, wilf_holds};
use crate::ratio::ratio_bridge_with;
use crate::semigroup::NumericalSemigroup;
use crate::tessellation::{kernel_lattice, prop_2_8_check, verify_tessellation};
use crate::weights::{rat, Rat};

#[derive(Debug, Clone, Serialize)]
pub struct BatteryReport {
    pub generators: Vec<u64>,
    pub wilf_margin: i64,
    pub violations: Vec<String>,
}

impl BatteryReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Runs every cross-module identity on one semigroup and records each
/// failure as a human-readable violation.
pub fn run_battery(s: &NumericalSemigroup) -> BatteryReport {
    let mut violations = Vec::new();
    macro_rules! check {
        ($name:expr, $ok:expr $(,)?) => {
            if !$ok {
                violations.push(format!("{} failed for {s}", $name));
            }
        };
    }

    let g0 = s.multiplicity() as i64;
    let e = s.embedding_dimension() as i64;
    let c = s.conductor() as i64;
    let max_a = s.apery().max() as i64;
    let mean = rat(s.apery().sum() as i64, g0);

    // exact left-count formula
    check!(
        "left count formula",
        s.left_count_formula() == Ok(s.left_count()),
    );
    // Zhai's mean-weight bound for Apéry sets
    check!("Zhai bound", mean <= rat(e - 1, e) * Rat::from(max_a));
    // symmetric iff the cuboid mean equality holds for Ã
    check!(
        "symmetry criterion",
        s.is_symmetric() == (mean == rat(max_a, 2)),
    );
    check!(
        "symmetric iff type one",
        s.is_symmetric() == (s.type_of() == 1),
    );
    check!("gap count", c as u64 - s.left_count() == s.genus());

    match lex_min_lift(s) {
        Err(err) => violations.push(format!("lift failed for {s}: {err}")),
        Ok(lift) => {
            let t_s = s.type_of();
            let t_lift = lift.tilde_a.type_of();
            check!("type comparison t(R(Ã)) >= t(S)", t_lift >= t_s);
            if e == 3 {
                check!("e=3 type bound", t_lift <= 2);
                if !s.is_symmetric() {
                    check!("e=3 non-symmetric types", t_s == 2 && t_lift == 2);
                }
            }

            let lat = kernel_lattice(s);
            let tessellates = verify_tessellation(&lift.tilde_a, &lat) == Ok(true);
            check!("kernel lattice tessellation", tessellates);
            if tessellates {
                match prop_2_8_check(&lift.tilde_a, &lat) {
                    Ok(r) => check!("tessellation generator structure", r.holds()),
                    Err(err) => violations.push(format!("structure check error for {s}: {err}")),
                }
            }

            let stories = lift.stories();
            check!("u count equals #L", stories.u_count == s.left_count());
            check!("d count equals genus", stories.d_count == s.genus());

            match ratio_bridge_with(s, &lift) {
                Ok((a, b)) => check!("ratio bridge identity", a == b),
                Err(err) => violations.push(format!("ratio bridge error for {s}: {err}")),
            }
        }
    }

    let wilf = wilf_holds(s);
    check!("Wilf inequality", wilf.holds);

    BatteryReport {
        generators: s.generators().to_vec(),
        wilf_margin: wilf.margin,
        violations,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::enumerate_semigroups;

    #[test]
    fn battery_passes_on_paper_examples() {
        for gens in [
            vec![7u64, 8, 12],
            vec![6, 7, 9],
            vec![14, 15, 17],
            vec![9, 10, 12, 13],
            vec![9, 20, 21, 23],
            vec![2, 3],
        ] {
            let s = NumericalSemigroup::new(&gens).unwrap();
            let report = run_battery(&s);
            assert!(report.passed(), "{:?}", report.violations);
        }
    }

    #[test]
    fn battery_passes_on_small_enumeration() {
        let mut count = 0u64;
        enumerate_semigroups(7, 25, |s| {
            let report = run_battery(&s);
            assert!(report.passed(), "{:?}", report.violations);
            count += 1;
        });
        assert!(count > 100, "enumeration too small: {count}");
    }
}
