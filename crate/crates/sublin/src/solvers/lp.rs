//! {0,1}-feasibility of two-variable inequality systems, decided by
//! translating each row's forbidden assignments into clauses.

use num_traits::Zero;

use super::{solve_2sat, SatResult};
use crate::instances::{Clause, Cnf2Formula, Literal, LpSystem};
use crate::rational::Rat;

/// A literal that is false exactly when `col` takes `value`.
fn forbidding_literal(col: u32, value: bool) -> Literal {
    Literal { var: col, positive: !value }
}

/// Decides {0,1}-feasibility on the system's own columns. A row with at most
/// two nonzero entries forbids up to four joint assignments, each of which
/// becomes one clause on the same column indices, so a satisfying assignment
/// of the clause set is verbatim a feasible point.
pub fn solve_lp(lp: &LpSystem) -> SatResult {
    let mut clauses = Vec::new();
    for row in &lp.rows {
        match row.entries.as_slice() {
            [] => {
                if Rat::zero() < row.bound {
                    return SatResult::Unsatisfiable;
                }
            }
            [(col, coef)] => {
                let forbidden: Vec<bool> = [false, true]
                    .into_iter()
                    .filter(|&v| {
                        let value = if v { coef.clone() } else { Rat::zero() };
                        value < row.bound
                    })
                    .collect();
                if forbidden.len() == 2 {
                    return SatResult::Unsatisfiable;
                }
                for v in forbidden {
                    clauses.push(Clause { first: forbidding_literal(*col, v), second: None });
                }
            }
            [(col1, coef1), (col2, coef2)] => {
                let mut forbidden = Vec::new();
                for v1 in [false, true] {
                    for v2 in [false, true] {
                        let mut value = Rat::zero();
                        if v1 {
                            value += coef1;
                        }
                        if v2 {
                            value += coef2;
                        }
                        if value < row.bound {
                            forbidden.push((v1, v2));
                        }
                    }
                }
                if forbidden.len() == 4 {
                    return SatResult::Unsatisfiable;
                }
                for (v1, v2) in forbidden {
                    clauses.push(Clause {
                        first: forbidding_literal(*col1, v1),
                        second: Some(forbidding_literal(*col2, v2)),
                    });
                }
            }
            _ => unreachable!("rows hold at most two entries"),
        }
    }
    let formula = Cnf2Formula { num_vars: lp.num_cols, clauses };
    let result = solve_2sat(&formula);
    if let Some(w) = result.witness() {
        debug_assert!(lp.is_satisfied_by(w));
    }
    result
}

/// Tries all {0,1} points in lexicographic order (column 1 most significant)
/// and returns the first feasible one.
pub fn brute_lp(lp: &LpSystem) -> SatResult {
    let n = lp.num_cols;
    assert!(n <= 20, "brute force is limited to 20 columns, got {n}");
    for mask in 0u32..1 << n {
        let point: Vec<bool> = (0..n).map(|i| mask >> (n - 1 - i) & 1 == 1).collect();
        if lp.is_satisfied_by(&point) {
            return SatResult::Satisfiable(point);
        }
    }
    SatResult::Unsatisfiable
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{gen_random, GenSpec, InstanceData};

    fn system(text: &str) -> LpSystem {
        LpSystem::parse(text).unwrap()
    }

    #[test]
    fn forcing_rows_pin_the_point() {
        let lp = system("p lp 2 2\nr 1:1/1 2:1/1 >= 1/1\nr 1:-1/1 >= 0/1\n");
        assert_eq!(solve_lp(&lp).witness(), Some(&[false, true][..]));
        assert_eq!(brute_lp(&lp).witness(), Some(&[false, true][..]));
    }

    #[test]
    fn fractional_bound_forces_a_one() {
        let lp = system("p lp 1 1\nr 1:1/1 >= 1/2\n");
        assert_eq!(solve_lp(&lp).witness(), Some(&[true][..]));
    }

    #[test]
    fn empty_row_with_positive_bound_is_infeasible() {
        let lp = system("p lp 1 1\nr >= 1/3\n");
        assert_eq!(solve_lp(&lp), SatResult::Unsatisfiable);
        assert_eq!(brute_lp(&lp), SatResult::Unsatisfiable);
    }

    #[test]
    fn opposed_strict_demands_are_infeasible() {
        let lp = system("p lp 2 1\nr 1:1/1 >= 1/1\nr 1:-1/1 >= 0/1\n");
        assert_eq!(solve_lp(&lp), SatResult::Unsatisfiable);
    }

    #[test]
    fn agrees_with_brute_force_on_random_systems() {
        for seed in 0..60 {
            let spec = GenSpec::Lp {
                num_rows: (seed % 7) as u32,
                num_cols: 1 + (seed % 5) as u32,
                column_cap: None,
            };
            let inst = gen_random(&spec, seed).unwrap();
            let InstanceData::Lp(lp) = &inst.data else { unreachable!() };
            let fast = solve_lp(lp);
            assert_eq!(fast.is_satisfiable(), brute_lp(lp).is_satisfiable(), "seed {seed}");
            if let Some(w) = fast.witness() {
                assert!(lp.is_satisfied_by(w), "seed {seed}");
            }
        }
    }
}
