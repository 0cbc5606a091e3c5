//! Translations between capped 2CNF formulas and two-variable inequality
//! systems over {0,1}.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::instances::{Clause, Cnf2Formula, Literal, LpRow, LpSystem};
use crate::rational::{rat, Rat};

use super::twosat::split_occurrences;

/// One inequality per clause: summing the clause's literals (a negation
/// contributes `-x`) must reach 1 minus the number of negations. Satisfying
/// assignments carry over verbatim in both directions; a clause mentioning a
/// variable twice merges into one coefficient, and a tautology becomes an
/// always-true empty row.
pub fn twosat3_to_lp(formula: &Cnf2Formula) -> LpSystem {
    let mut rows = Vec::with_capacity(formula.clauses.len());
    for clause in &formula.clauses {
        let mut coefs: BTreeMap<u32, i64> = BTreeMap::new();
        let mut negations = 0i64;
        for lit in clause.literals() {
            *coefs.entry(lit.var).or_insert(0) += if lit.positive { 1 } else { -1 };
            if !lit.positive {
                negations += 1;
            }
        }
        let entries = coefs
            .into_iter()
            .filter(|&(_, c)| c != 0)
            .map(|(col, c)| (col, rat(c, 1)))
            .collect();
        rows.push(LpRow { entries, bound: rat(1 - negations, 1) });
    }
    LpSystem { num_cols: formula.num_vars, rows }
}

fn row_value(row: &LpRow, mask: u32) -> Rat {
    let mut sum = Rat::zero();
    for (i, (_, coef)) in row.entries.iter().enumerate() {
        if mask >> i & 1 == 1 {
            sum += coef;
        }
    }
    sum
}

/// Forbids each violating {0,1} row assignment with the clause of the
/// complementary literals, then caps occurrences with [`split_occurrences`].
/// A row no assignment satisfies collapses the whole system to a fixed
/// one-variable contradiction. For a system whose columns hold at most `k`
/// nonzeros, a variable occurs at most `3k` times before the cap.
pub fn lp_to_2sat3(lp: &LpSystem) -> Cnf2Formula {
    let mut clauses = Vec::new();
    for row in &lp.rows {
        let combos = 1u32 << row.entries.len();
        let mut forbidden = Vec::with_capacity(combos as usize);
        for mask in 0..combos {
            if row_value(row, mask) >= row.bound {
                continue;
            }
            let lits: Vec<Literal> = row
                .entries
                .iter()
                .enumerate()
                .map(|(i, &(col, _))| Literal { var: col, positive: mask >> i & 1 == 0 })
                .collect();
            forbidden.push(lits);
        }
        if forbidden.len() == combos as usize {
            let x = Literal::pos(1);
            return Cnf2Formula::new(1, vec![Clause::unit(x), Clause::unit(x.negated())]);
        }
        for lits in forbidden {
            match lits.as_slice() {
                [a] => clauses.push(Clause::unit(*a)),
                [a, b] => clauses.push(Clause::pair(*a, *b)),
                [] => unreachable!("an all-violating empty row short-circuits above"),
                _ => unreachable!("rows have at most two entries"),
            }
        }
    }
    split_occurrences(&Cnf2Formula { num_vars: lp.num_cols, clauses })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{gen_random, GenSpec, InstanceData};
    use crate::solvers::{brute_lp, solve_2sat, solve_lp};

    fn random_cnf(seed: u64) -> Cnf2Formula {
        let spec = GenSpec::Cnf { num_vars: 5, num_clauses: 9, occurrence_cap: Some(3) };
        match gen_random(&spec, seed).unwrap().data {
            InstanceData::Cnf(f) => f,
            _ => unreachable!(),
        }
    }

    fn random_lp(seed: u64) -> LpSystem {
        let spec = GenSpec::Lp { num_rows: 7, num_cols: 5, column_cap: Some(3) };
        match gen_random(&spec, seed).unwrap().data {
            InstanceData::Lp(lp) => lp,
            _ => unreachable!(),
        }
    }

    #[test]
    fn formula_and_system_have_identical_witness_sets() {
        for seed in 0..30 {
            let f = random_cnf(seed);
            let lp = twosat3_to_lp(&f);
            assert_eq!(lp.num_rows() as usize, f.clauses.len());
            assert_eq!(lp.num_cols, f.num_vars);
            assert!(lp.validate().is_empty());
            assert!(lp.max_column_count() <= 3);
            for mask in 0u32..1 << f.num_vars {
                let assignment: Vec<bool> =
                    (0..f.num_vars).map(|i| mask >> i & 1 == 1).collect();
                assert_eq!(
                    f.is_satisfied_by(&assignment),
                    lp.is_satisfied_by(&assignment),
                    "seed {seed} mask {mask}"
                );
            }
        }
    }

    #[test]
    fn clause_shapes_translate_exactly() {
        let f = Cnf2Formula::parse("p cnf 2 4\n1 2 0\n-1 2 0\n-1 -1 0\n1 -1 0\n").unwrap();
        let lp = twosat3_to_lp(&f);
        assert_eq!(lp.rows[0].bound, rat(1, 1));
        assert_eq!(lp.rows[1].entries[0].1, rat(-1, 1));
        assert_eq!(lp.rows[1].bound, rat(0, 1));
        assert_eq!(lp.rows[2].entries, vec![(1, rat(-2, 1))]);
        assert_eq!(lp.rows[2].bound, rat(-1, 1));
        assert!(lp.rows[3].entries.is_empty());
        assert_eq!(lp.rows[3].bound, rat(0, 1));
    }

    #[test]
    fn system_satisfiability_round_trips_through_clauses() {
        for seed in 0..30 {
            let lp = random_lp(seed);
            let f = lp_to_2sat3(&lp);
            assert!(f.max_occurrence() <= 3, "seed {seed}");
            assert!(f.validate().is_empty());
            assert!(f.clauses.len() as u64 <= 10 * lp.num_rows() as u64 + 10);
            assert_eq!(
                solve_2sat(&f).is_satisfiable(),
                solve_lp(&lp).is_satisfiable(),
                "seed {seed}"
            );
            assert_eq!(
                solve_lp(&lp).is_satisfiable(),
                brute_lp(&lp).is_satisfiable(),
                "seed {seed}"
            );
        }
    }

    #[test]
    fn unsatisfiable_row_short_circuits() {
        let lp = LpSystem::parse("p lp 2 2\nr >= 1/1\nr 1:1/1 >= 0/1\n").unwrap();
        let f = lp_to_2sat3(&lp);
        assert_eq!(f.num_vars, 1);
        assert_eq!(f.clauses.len(), 2);
        assert!(!solve_2sat(&f).is_satisfiable());
    }

    #[test]
    fn two_entry_rows_forbid_only_bad_corners() {
        let lp = LpSystem::parse("p lp 1 2\nr 1:1/1 2:-1/2 >= 1/2\n").unwrap();
        let f = lp_to_2sat3(&lp);
        for mask in 0u32..4 {
            let assignment = vec![mask & 1 == 1, mask >> 1 & 1 == 1];
            assert_eq!(lp.is_satisfied_by(&assignment), f.is_satisfied_by(&assignment));
        }
    }
}
