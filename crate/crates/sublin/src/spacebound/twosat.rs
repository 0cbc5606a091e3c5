//! Satisfiability decision built on metered reachability.

use super::oracle::{neg_vertex, pos_vertex, ImplicationGraph};
use super::reach::reach_with;
use super::workspace::{index_bits, BudgetExhausted, MeteredWorkspace};
use super::Strategy;
use crate::instances::Cnf2Formula;

/// Decides satisfiability by asking, for each variable in turn, whether its
/// truth forces its falsity and vice versa in the implication structure; the
/// formula is unsatisfiable exactly when both hold for some variable.
///
/// Besides the two reachability runs per variable this keeps only the loop
/// index, so the peak depends on the variable count and the strategy, never
/// on the clause count.
pub fn twosat_space(
    formula: &Cnf2Formula,
    strategy: Strategy,
    ws: &mut MeteredWorkspace,
) -> Result<bool, BudgetExhausted> {
    let loop_bits = index_bits(formula.num_vars as u64);
    ws.alloc(loop_bits);
    let result = (|| -> Result<bool, BudgetExhausted> {
        for var in 1..=formula.num_vars {
            ws.step()?;
            let down = ImplicationGraph::new(formula, pos_vertex(var), neg_vertex(var));
            if reach_with(strategy, &down, ws)? {
                let up = ImplicationGraph::new(formula, neg_vertex(var), pos_vertex(var));
                if reach_with(strategy, &up, ws)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    })();
    if result.is_ok() {
        ws.free(loop_bits);
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{gen_random, GenSpec, InstanceData};
    use crate::solvers::solve_2sat;

    fn fresh() -> MeteredWorkspace {
        MeteredWorkspace::new(100_000_000)
    }

    #[test]
    fn agrees_with_the_component_solver() {
        for seed in 0..30 {
            let spec = GenSpec::Cnf {
                num_vars: 1 + (seed % 5) as u32,
                num_clauses: (seed % 8) as u32,
                occurrence_cap: None,
            };
            let inst = gen_random(&spec, seed).unwrap();
            let InstanceData::Cnf(f) = &inst.data else { unreachable!() };
            let expected = solve_2sat(f).is_satisfiable();
            for strategy in [Strategy::Bfs, Strategy::Hybrid { threshold: 4 }] {
                let mut ws = fresh();
                assert_eq!(twosat_space(f, strategy, &mut ws), Ok(expected), "seed {seed}");
                assert_eq!(ws.live_bits(), 0);
            }
        }
    }

    #[test]
    fn peak_ignores_clause_count() {
        // Unsatisfiable at variable 1 through direct implication edges, so
        // even the recursive strategies decide quickly; the rest is padding.
        let mut text = String::from("p cnf 10 12\n1 0\n-1 0\n");
        for v in 2..=9 {
            text.push_str(&format!("{} -{} 0\n", v, v + 1));
        }
        text.push_str("10 -2 0\n2 4 0\n");
        let base = Cnf2Formula::parse(&text).unwrap();
        let mut doubled = base.clone();
        doubled.clauses.extend(base.clauses.iter().cloned());
        for strategy in [Strategy::Bfs, Strategy::Hybrid { threshold: 4 }] {
            let (mut small, mut large) = (fresh(), fresh());
            assert_eq!(twosat_space(&base, strategy, &mut small), Ok(false));
            assert_eq!(twosat_space(&doubled, strategy, &mut large), Ok(false));
            assert_eq!(small.peak_bits(), large.peak_bits(), "{strategy:?}");
            assert!(small.steps() < large.steps(), "{strategy:?}");
        }
    }
}
