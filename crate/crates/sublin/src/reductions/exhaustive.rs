//! Exhaustive source domains for the smallest instance sizes.
//!
//! Verification replays every reduction over every instance of a small
//! shape, so these enumerations fix a canonical order: clause and row
//! universes are listed smallest-first, edge universes in (from, to) order,
//! and subsets by size then lexicographically. Reports built on top of them
//! are reproducible byte for byte.

use crate::instances::{
    Clause, Cnf2Formula, Digraph, Family, InstanceData, Literal, LpRow, LpSystem, ParamInstance,
};
use crate::rational::rat;

use super::decl::ReductionDecl;

/// Formulas drawn exhaustively take at most this many clauses.
pub const EXHAUSTIVE_CLAUSE_LIMIT: usize = 4;

/// Systems drawn exhaustively take at most this many rows.
pub const EXHAUSTIVE_LP_ROW_LIMIT: usize = 3;

/// All index subsets of `{0, .., n-1}` with at most `max_take` members,
/// ordered by size and within a size lexicographically.
fn subsets_up_to(n: usize, max_take: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    let mut current = Vec::new();
    for size in 1..=max_take.min(n) {
        combos(n, size, 0, &mut current, &mut out);
    }
    out
}

fn combos(n: usize, want: usize, start: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if current.len() == want {
        out.push(current.clone());
        return;
    }
    let room = want - current.len();
    for i in start..=n - room {
        current.push(i);
        combos(n, want, i + 1, current, out);
        current.pop();
    }
}

/// Unit clauses in literal order, then unordered pairs of distinct literals.
pub fn clause_universe(num_vars: u32) -> Vec<Clause> {
    let literals: Vec<Literal> = (1..=num_vars)
        .flat_map(|v| [Literal::pos(v), Literal::neg(v)])
        .collect();
    let mut universe: Vec<Clause> = literals.iter().map(|&l| Clause::unit(l)).collect();
    for i in 0..literals.len() {
        for j in i + 1..literals.len() {
            universe.push(Clause::pair(literals[i], literals[j]));
        }
    }
    universe
}

/// Every formula on exactly `num_vars` variables whose clause list is a
/// subset of [`clause_universe`] with at most `max_clauses` members. The
/// occurrence cap, when given, filters the result.
pub fn exhaustive_formulas(
    num_vars: u32,
    max_clauses: usize,
    occurrence_cap: Option<u32>,
) -> Vec<Cnf2Formula> {
    let universe = clause_universe(num_vars);
    let mut out = Vec::new();
    for subset in subsets_up_to(universe.len(), max_clauses) {
        let clauses: Vec<Clause> = subset.iter().map(|&i| universe[i]).collect();
        let formula = Cnf2Formula::new(num_vars, clauses);
        if occurrence_cap.is_none_or(|cap| formula.max_occurrence() <= cap) {
            out.push(formula);
        }
    }
    out
}

/// All ordered vertex pairs on `1..=n`, self-loops included, in (from, to)
/// lexicographic order.
pub fn edge_universe(num_vertices: u32) -> Vec<(u32, u32)> {
    let mut edges = Vec::new();
    for from in 1..=num_vertices {
        for to in 1..=num_vertices {
            edges.push((from, to));
        }
    }
    edges
}

/// Every digraph on exactly `num_vertices` vertices over every subset of the
/// edge universe, filtered by the degree cap when given. All source/target
/// pairs are enumerated up to 3 vertices; past that only (1, n) is used,
/// which keeps the count at one per edge subset.
pub fn exhaustive_digraphs(num_vertices: u32, degree_cap: Option<u32>) -> Vec<Digraph> {
    if num_vertices == 0 || num_vertices > 5 {
        return Vec::new();
    }
    let universe = edge_universe(num_vertices);
    let st_pairs: Vec<(u32, u32)> = if num_vertices <= 3 {
        edge_universe(num_vertices)
    } else {
        vec![(1, num_vertices)]
    };
    let mut out = Vec::new();
    for mask in 0u64..1u64 << universe.len() {
        let edges: Vec<(u32, u32)> = universe
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &edge)| edge)
            .collect();
        for &(source, target) in &st_pairs {
            let graph = Digraph::new(num_vertices, edges.clone(), source, target);
            if degree_cap.is_none_or(|cap| graph.degree_violations(cap).is_empty()) {
                out.push(graph);
            }
        }
    }
    out
}

/// Rows with one or two unit coefficients (+1 or -1) over `1..=num_cols`
/// and an integer bound in -1..=2, singles before pairs, in column order.
pub fn lp_row_universe(num_cols: u32) -> Vec<LpRow> {
    let bounds = [-1i64, 0, 1, 2];
    let coefs = [1i64, -1];
    let mut rows = Vec::new();
    for col in 1..=num_cols {
        for &coef in &coefs {
            for &bound in &bounds {
                rows.push(LpRow { entries: vec![(col, rat(coef, 1))], bound: rat(bound, 1) });
            }
        }
    }
    for a in 1..=num_cols {
        for b in a + 1..=num_cols {
            for &ca in &coefs {
                for &cb in &coefs {
                    for &bound in &bounds {
                        rows.push(LpRow {
                            entries: vec![(a, rat(ca, 1)), (b, rat(cb, 1))],
                            bound: rat(bound, 1),
                        });
                    }
                }
            }
        }
    }
    rows
}

/// Every system on exactly `num_cols` columns whose row list is a subset of
/// [`lp_row_universe`] with at most `max_rows` members, filtered by the
/// per-column cap when given.
pub fn exhaustive_lps(num_cols: u32, max_rows: usize, column_cap: Option<u32>) -> Vec<LpSystem> {
    let universe = lp_row_universe(num_cols);
    let mut out = Vec::new();
    for subset in subsets_up_to(universe.len(), max_rows) {
        let rows: Vec<LpRow> = subset.iter().map(|&i| universe[i].clone()).collect();
        let system = LpSystem::new(num_cols, rows);
        if column_cap.is_none_or(|cap| system.column_violations(cap).is_empty()) {
            out.push(system);
        }
    }
    out
}

/// Exhaustive instances of the declaration's source family at every size up
/// to `size` (variables, vertices, or columns), restricted to the declared
/// source cap. Families that never appear as sources yield nothing.
pub fn exhaustive_sources(decl: &ReductionDecl, size: u32) -> Vec<ParamInstance> {
    let cap = decl.source_cap;
    let mut out = Vec::new();
    match decl.source {
        Family::Cnf => {
            for n in 0..=size {
                let formulas = exhaustive_formulas(n, EXHAUSTIVE_CLAUSE_LIMIT, cap);
                out.extend(formulas.into_iter().map(InstanceData::Cnf).map(ParamInstance::new));
            }
        }
        Family::Digraph => {
            for n in 1..=size {
                let graphs = exhaustive_digraphs(n, cap);
                out.extend(graphs.into_iter().map(InstanceData::Digraph).map(ParamInstance::new));
            }
        }
        Family::Lp => {
            for cols in 0..=size {
                let systems = exhaustive_lps(cols, EXHAUSTIVE_LP_ROW_LIMIT, cap);
                out.extend(systems.into_iter().map(InstanceData::Lp).map(ParamInstance::new));
            }
        }
        Family::Nfa | Family::Uock | Family::Hpp => {}
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clause_universe_counts() {
        assert_eq!(clause_universe(0).len(), 0);
        assert_eq!(clause_universe(1).len(), 3);
        assert_eq!(clause_universe(2).len(), 10);
        assert_eq!(clause_universe(3).len(), 21);
    }

    #[test]
    fn formula_enumeration_starts_empty_and_counts_subsets() {
        let formulas = exhaustive_formulas(1, 4, None);
        assert_eq!(formulas.len(), 8);
        assert_eq!(formulas[0].clauses.len(), 0);
        assert_eq!(formulas[1].clauses, vec![Clause::unit(Literal::pos(1))]);
        assert_eq!(exhaustive_formulas(2, 4, None).len(), 386);
    }

    #[test]
    fn occurrence_cap_filters_formulas() {
        let capped = exhaustive_formulas(1, 4, Some(3));
        assert!(capped.len() < 8);
        assert!(capped.iter().all(|f| f.max_occurrence() <= 3));
    }

    #[test]
    fn edge_universe_is_ordered_with_self_loops() {
        assert_eq!(edge_universe(2), vec![(1, 1), (1, 2), (2, 1), (2, 2)]);
    }

    #[test]
    fn digraph_enumeration_counts() {
        assert_eq!(exhaustive_digraphs(1, None).len(), 2);
        assert_eq!(exhaustive_digraphs(2, None).len(), 64);
        assert_eq!(exhaustive_digraphs(4, None).len(), 1 << 16);
    }

    #[test]
    fn degree_cap_filters_digraphs() {
        let capped = exhaustive_digraphs(2, Some(1));
        assert_eq!(capped.len(), 12);
        assert!(capped.iter().all(|g| g.degree_violations(1).is_empty()));
    }

    #[test]
    fn lp_enumeration_counts() {
        assert_eq!(lp_row_universe(1).len(), 8);
        assert_eq!(lp_row_universe(2).len(), 32);
        assert_eq!(exhaustive_lps(1, 3, None).len(), 93);
        assert_eq!(exhaustive_lps(2, 3, None).len(), 5489);
    }

    #[test]
    fn sources_respect_the_declared_cap() {
        let decl = super::super::catalog_entry("reach-to-2sat3").unwrap().decl;
        let sources = exhaustive_sources(&decl, 3);
        assert!(!sources.is_empty());
        assert!(sources.iter().all(|s| s.validate_capped(3).is_empty()));
    }
}
