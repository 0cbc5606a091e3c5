//! Translations between 2CNF satisfiability and s-t reachability.

use std::collections::BTreeSet;

use crate::instances::{Clause, Cnf2Formula, Digraph, Literal};

/// Caps literal occurrences at 3 per variable without changing satisfiability.
///
/// The formula is normalized first. A variable with c >= 4 occurrences is
/// replaced by c copies, one per occurrence in clause order, tied together by
/// the implication cycle `copy_i -> copy_{i+1}` (indices mod c), which forces
/// all copies to one value. Each copy then occurs once in its original clause
/// and twice in the cycle. Output clause count is below `3 * m + 1` for an
/// input with `m` clauses.
pub fn split_occurrences(formula: &Cnf2Formula) -> Cnf2Formula {
    let formula = formula.normalize();
    let counts = formula.occurrence_counts();
    let split = |v: usize| counts[v] >= 4;

    let mut first_copy = vec![0u32; formula.num_vars as usize];
    let mut next_var = 1u32;
    for v in 0..formula.num_vars as usize {
        first_copy[v] = next_var;
        next_var += if split(v) { counts[v] } else { 1 };
    }

    let mut cursor = vec![0u32; formula.num_vars as usize];
    let mut remap = |l: Literal| {
        let v = (l.var - 1) as usize;
        let copy = if split(v) { cursor[v] } else { 0 };
        cursor[v] += 1;
        Literal { var: first_copy[v] + copy, positive: l.positive }
    };
    let mut clauses = Vec::with_capacity(3 * formula.clauses.len());
    for clause in &formula.clauses {
        let first = remap(clause.first);
        let second = clause.second.map(&mut remap);
        clauses.push(Clause { first, second });
    }
    for v in 0..formula.num_vars as usize {
        if split(v) {
            for i in 0..counts[v] {
                let this = first_copy[v] + i;
                let next = first_copy[v] + (i + 1) % counts[v];
                clauses.push(Clause::pair(Literal::neg(this), Literal::pos(next)));
            }
        }
    }
    Cnf2Formula { num_vars: next_var - 1, clauses }
}

fn literal_node(l: Literal) -> u32 {
    if l.positive { 2 * l.var - 1 } else { 2 * l.var }
}

/// The reachability questions whose answers decide satisfiability: on the
/// implication graph of the formula, queries `2(v-1)` and `2(v-1)+1` ask
/// whether `v` reaches its negation and back. The formula is satisfiable
/// exactly when no variable answers yes to both, which
/// [`combine_query_answers`] evaluates. Every query graph has `2 * num_vars`
/// vertices.
pub fn twosat3_to_reach_queries(formula: &Cnf2Formula) -> Vec<Digraph> {
    let mut edge_set = BTreeSet::new();
    for clause in &formula.clauses {
        let (a, b) = (clause.first, clause.second.unwrap_or(clause.first));
        edge_set.insert((literal_node(a.negated()), literal_node(b)));
        edge_set.insert((literal_node(b.negated()), literal_node(a)));
    }
    let edges: Vec<(u32, u32)> = edge_set.into_iter().collect();
    let num_vertices = 2 * formula.num_vars;
    let mut queries = Vec::with_capacity(2 * formula.num_vars as usize);
    for v in 1..=formula.num_vars {
        let pos = literal_node(Literal::pos(v));
        let neg = literal_node(Literal::neg(v));
        queries.push(Digraph::new(num_vertices, edges.clone(), pos, neg));
        queries.push(Digraph::new(num_vertices, edges.clone(), neg, pos));
    }
    queries
}

/// Folds the per-query reachability answers back into a satisfiability
/// verdict; `answers[2i]` and `answers[2i+1]` belong to variable `i + 1`.
pub fn combine_query_answers(answers: &[bool]) -> bool {
    answers.chunks(2).all(|pair| !(pair[0] && pair[1]))
}

/// Encodes non-reachability as a capped 2CNF formula: variable `v` stands for
/// "v is reachable from the source", each edge propagates it, the source
/// asserts it, and the target forbids it. The formula is satisfiable exactly
/// when the target is NOT reachable, so the answer flips.
pub fn reach_to_2sat3(graph: &Digraph) -> Cnf2Formula {
    let mut clauses = Vec::with_capacity(graph.edges.len() + 2);
    clauses.push(Clause::unit(Literal::pos(graph.source)));
    clauses.push(Clause::unit(Literal::neg(graph.target)));
    for &(u, v) in &graph.edges {
        clauses.push(Clause::pair(Literal::neg(u), Literal::pos(v)));
    }
    split_occurrences(&Cnf2Formula { num_vars: graph.num_vertices, clauses })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{gen_random, GenSpec, InstanceData};
    use crate::solvers::{reach_decide, solve_2sat};

    fn random_cnf(seed: u64, cap: Option<u32>) -> Cnf2Formula {
        let spec = GenSpec::Cnf { num_vars: 6, num_clauses: 10, occurrence_cap: cap };
        match gen_random(&spec, seed).unwrap().data {
            InstanceData::Cnf(f) => f,
            _ => unreachable!(),
        }
    }

    fn random_digraph(seed: u64, cap: Option<u32>) -> Digraph {
        let spec = GenSpec::Digraph { num_vertices: 7, num_edges: 9, degree_cap: cap };
        match gen_random(&spec, seed).unwrap().data {
            InstanceData::Digraph(g) => g,
            _ => unreachable!(),
        }
    }

    #[test]
    fn split_caps_occurrences_and_preserves_satisfiability() {
        for seed in 0..40 {
            let f = random_cnf(seed, None);
            let g = split_occurrences(&f);
            assert!(g.max_occurrence() <= 3, "seed {seed}");
            assert!(g.validate().is_empty());
            assert!(g.clauses.len() <= 3 * f.clauses.len());
            assert_eq!(
                solve_2sat(&f).is_satisfiable(),
                solve_2sat(&g).is_satisfiable(),
                "seed {seed}"
            );
        }
    }

    #[test]
    fn split_leaves_capped_formulas_with_their_clause_count() {
        let f = random_cnf(3, Some(3));
        let g = split_occurrences(&f);
        assert_eq!(g.clauses.len(), f.normalize().clauses.len());
    }

    #[test]
    fn split_replaces_a_busy_variable_by_a_cycle() {
        let x = Literal::pos(1);
        let f = Cnf2Formula::new(
            2,
            vec![
                Clause::pair(x, Literal::pos(2)),
                Clause::pair(x.negated(), Literal::pos(2)),
                Clause::unit(x),
                Clause::pair(Literal::neg(2), x),
            ],
        );
        let g = split_occurrences(&f);
        assert_eq!(g.num_vars, 5);
        assert_eq!(g.clauses.len(), 4 + 4);
        assert!(g.max_occurrence() <= 3);
        assert!(solve_2sat(&g).is_satisfiable());
    }

    #[test]
    fn queries_decide_satisfiability() {
        for seed in 0..40 {
            let f = random_cnf(seed, Some(3));
            let queries = twosat3_to_reach_queries(&f);
            assert_eq!(queries.len(), 2 * f.num_vars as usize);
            for q in &queries {
                assert_eq!(q.num_vertices, 2 * f.num_vars);
                assert!(q.validate().is_empty());
            }
            let answers: Vec<bool> = queries.iter().map(reach_decide).collect();
            assert_eq!(
                combine_query_answers(&answers),
                solve_2sat(&f).is_satisfiable(),
                "seed {seed}"
            );
        }
    }

    #[test]
    fn query_graphs_share_one_implication_graph() {
        let f = Cnf2Formula::parse("p cnf 2 2\n1 -2 0\n1 0\n").unwrap();
        let queries = twosat3_to_reach_queries(&f);
        assert_eq!(queries.len(), 4);
        assert_eq!(queries[0].edges, queries[3].edges);
        assert_eq!((queries[0].source, queries[0].target), (1, 2));
        assert_eq!((queries[1].source, queries[1].target), (2, 1));
    }

    #[test]
    fn reachability_flips_to_unsatisfiability() {
        let reachable = Digraph::new(3, vec![(1, 2), (2, 3)], 1, 3);
        assert!(!solve_2sat(&reach_to_2sat3(&reachable)).is_satisfiable());
        let blocked = Digraph::new(3, vec![(2, 1), (2, 3)], 1, 3);
        assert!(solve_2sat(&reach_to_2sat3(&blocked)).is_satisfiable());
        let trivial = Digraph::new(1, vec![], 1, 1);
        assert!(!solve_2sat(&reach_to_2sat3(&trivial)).is_satisfiable());
    }

    #[test]
    fn reach_encoding_is_capped_and_small() {
        for seed in 0..40 {
            let g = random_digraph(seed, Some(3));
            let f = reach_to_2sat3(&g);
            assert!(f.max_occurrence() <= 3, "seed {seed}");
            assert!(f.clauses.len() as u64 <= 5 * g.num_vertices as u64 + 5);
            assert_eq!(
                solve_2sat(&f).is_satisfiable(),
                !reach_decide(&g),
                "seed {seed}"
            );
        }
    }
}
