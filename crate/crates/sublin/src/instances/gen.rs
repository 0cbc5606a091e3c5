//! Seeded random instance generation for every family.
//!
//! Generation is deterministic in the seed. Budgeted shapes (occurrence caps,
//! degree caps, column caps) are respected by construction where possible and
//! by bounded retry otherwise; a budget that cannot be met yields an error
//! rather than a silently smaller instance.

use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use super::{
    Clause, Cnf2Formula, Digraph, HppInstance, InstanceData, Literal, LpRow, LpSystem, NfaSpec,
    ParamInstance, UockInstance,
};
use crate::rational::{rat, Rat};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot generate instance: {0}")]
pub struct GenError(pub String);

/// Shape of a random instance. `None` caps mean unbounded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GenSpec {
    Cnf { num_vars: u32, num_clauses: u32, occurrence_cap: Option<u32> },
    Digraph { num_vertices: u32, num_edges: u32, degree_cap: Option<u32> },
    Lp { num_rows: u32, num_cols: u32, column_cap: Option<u32> },
    Nfa { num_states: u32, num_symbols: u32, input_len: u32, num_transitions: u32 },
    Uock { token_count: u32, piece_count: u32 },
    Hpp { dim: u32, length_d: u32 },
}

pub fn gen_random(spec: &GenSpec, seed: u64) -> Result<ParamInstance, GenError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let data = match *spec {
        GenSpec::Cnf { num_vars, num_clauses, occurrence_cap } => {
            InstanceData::Cnf(gen_cnf(&mut rng, num_vars, num_clauses, occurrence_cap)?)
        }
        GenSpec::Digraph { num_vertices, num_edges, degree_cap } => {
            InstanceData::Digraph(gen_digraph(&mut rng, num_vertices, num_edges, degree_cap)?)
        }
        GenSpec::Lp { num_rows, num_cols, column_cap } => {
            InstanceData::Lp(gen_lp(&mut rng, num_rows, num_cols, column_cap)?)
        }
        GenSpec::Nfa { num_states, num_symbols, input_len, num_transitions } => {
            InstanceData::Nfa(gen_nfa(&mut rng, num_states, num_symbols, input_len, num_transitions)?)
        }
        GenSpec::Uock { token_count, piece_count } => {
            InstanceData::Uock(gen_uock(&mut rng, token_count, piece_count)?)
        }
        GenSpec::Hpp { dim, length_d } => InstanceData::Hpp(gen_hpp(&mut rng, dim, length_d)?),
    };
    Ok(ParamInstance::new(data))
}

/// Picks an index with probability proportional to its remaining budget.
fn weighted_pick(rng: &mut ChaCha8Rng, budgets: &[u64], exclude: Option<usize>) -> Option<usize> {
    let total: u64 = budgets
        .iter()
        .enumerate()
        .filter(|&(i, _)| Some(i) != exclude)
        .map(|(_, &b)| b)
        .sum();
    if total == 0 {
        return None;
    }
    let mut draw = rng.random_range(0..total);
    for (i, &b) in budgets.iter().enumerate() {
        if Some(i) == exclude {
            continue;
        }
        if draw < b {
            return Some(i);
        }
        draw -= b;
    }
    unreachable!("draw is below the budget total")
}

fn gen_cnf(
    rng: &mut ChaCha8Rng,
    num_vars: u32,
    num_clauses: u32,
    occurrence_cap: Option<u32>,
) -> Result<Cnf2Formula, GenError> {
    if num_vars == 0 && num_clauses > 0 {
        return Err(GenError("clauses need at least one variable".into()));
    }
    let cap = occurrence_cap.unwrap_or(2 * num_clauses.max(1)) as u64;
    let total_slots = num_vars as u64 * cap;
    if (num_clauses as u64) > total_slots {
        return Err(GenError(format!(
            "{num_clauses} clauses need at least {num_clauses} literal slots, cap allows {total_slots}"
        )));
    }

    let mut widths = vec![2u64; num_clauses as usize];
    for w in widths.iter_mut() {
        if rng.random_bool(0.15) {
            *w = 1;
        }
    }
    while widths.iter().sum::<u64>() > total_slots {
        let i = rng.random_range(0..widths.len());
        if widths[i] == 2 {
            widths[i] = 1;
        }
    }

    let mut budgets = vec![cap; num_vars as usize];
    let mut clauses = Vec::with_capacity(num_clauses as usize);
    for &width in &widths {
        let first = weighted_pick(rng, &budgets, None).expect("width sum fits the budget total");
        budgets[first] -= 1;
        let first = Literal { var: first as u32 + 1, positive: rng.random_bool(0.5) };
        let second = if width == 2 {
            let v = weighted_pick(rng, &budgets, None).expect("width sum fits the budget total");
            budgets[v] -= 1;
            Some(Literal { var: v as u32 + 1, positive: rng.random_bool(0.5) })
        } else {
            None
        };
        clauses.push(Clause { first, second });
    }
    Ok(Cnf2Formula { num_vars, clauses })
}

fn gen_digraph(
    rng: &mut ChaCha8Rng,
    num_vertices: u32,
    num_edges: u32,
    degree_cap: Option<u32>,
) -> Result<Digraph, GenError> {
    if num_vertices == 0 {
        return Err(GenError("a reachability instance needs at least one vertex".into()));
    }
    let n = num_vertices as u64;
    if num_edges as u64 > n * n {
        return Err(GenError(format!("{num_edges} distinct edges do not fit on {num_vertices} vertices")));
    }
    if let Some(cap) = degree_cap {
        if 2 * num_edges as u64 > n * cap as u64 {
            return Err(GenError(format!(
                "{num_edges} edges need degree sum {}, cap allows {}",
                2 * num_edges as u64,
                n * cap as u64
            )));
        }
    }
    let cap = degree_cap.unwrap_or(2 * num_edges.max(1));

    'restart: for _ in 0..20 {
        let mut used = BTreeSet::new();
        let mut degrees = vec![0u32; num_vertices as usize];
        let mut edges = Vec::with_capacity(num_edges as usize);
        let mut tries = 200 + 100 * num_edges as u64;
        while (edges.len() as u32) < num_edges {
            if tries == 0 {
                continue 'restart;
            }
            tries -= 1;
            let u = rng.random_range(1..=num_vertices);
            let v = rng.random_range(1..=num_vertices);
            let load = if u == v { 2 } else { 1 };
            if used.contains(&(u, v))
                || degrees[(u - 1) as usize] + load > cap
                || (u != v && degrees[(v - 1) as usize] + 1 > cap)
            {
                continue;
            }
            used.insert((u, v));
            degrees[(u - 1) as usize] += load;
            if u != v {
                degrees[(v - 1) as usize] += 1;
            }
            edges.push((u, v));
        }
        let source = rng.random_range(1..=num_vertices);
        let target = rng.random_range(1..=num_vertices);
        return Ok(Digraph { num_vertices, edges, source, target });
    }
    Err(GenError(format!(
        "could not place {num_edges} edges on {num_vertices} vertices under degree cap {cap}"
    )))
}

fn small_rat(rng: &mut ChaCha8Rng, zero_ok: bool) -> Rat {
    let mut numer = rng.random_range(-3i64..=3);
    while numer == 0 && !zero_ok {
        numer = rng.random_range(-3i64..=3);
    }
    rat(numer, rng.random_range(1i64..=3))
}

fn gen_lp(
    rng: &mut ChaCha8Rng,
    num_rows: u32,
    num_cols: u32,
    column_cap: Option<u32>,
) -> Result<LpSystem, GenError> {
    let cap = column_cap.unwrap_or(2 * num_rows.max(1)) as u64;
    let mut budgets = vec![cap; num_cols as usize];
    let mut rows = Vec::with_capacity(num_rows as usize);
    for _ in 0..num_rows {
        let want_two = num_cols >= 2 && !rng.random_bool(0.25);
        let mut entries = Vec::new();
        if let Some(first) = weighted_pick(rng, &budgets, None) {
            budgets[first] -= 1;
            entries.push((first as u32 + 1, small_rat(rng, false)));
            if want_two {
                if let Some(second) = weighted_pick(rng, &budgets, Some(first)) {
                    budgets[second] -= 1;
                    entries.push((second as u32 + 1, small_rat(rng, false)));
                }
            }
        }
        entries.sort_by_key(|(c, _)| *c);
        let bound = if entries.is_empty() {
            rat(rng.random_range(-2i64..=0), 1)
        } else {
            small_rat(rng, true)
        };
        rows.push(LpRow { entries, bound });
    }
    Ok(LpSystem { num_cols, rows })
}

fn gen_nfa(
    rng: &mut ChaCha8Rng,
    num_states: u32,
    num_symbols: u32,
    input_len: u32,
    num_transitions: u32,
) -> Result<NfaSpec, GenError> {
    if num_states == 0 {
        return Err(GenError("an automaton needs at least one state".into()));
    }
    let max = num_states as u64 * num_symbols as u64 * num_states as u64;
    if num_transitions as u64 > max {
        return Err(GenError(format!("{num_transitions} distinct transitions do not fit, maximum is {max}")));
    }
    let mut triples = BTreeSet::new();
    while (triples.len() as u32) < num_transitions {
        triples.insert((
            rng.random_range(1..=num_states),
            rng.random_range(0..num_symbols),
            rng.random_range(1..=num_states),
        ));
    }
    let mut transitions: BTreeMap<(u32, u32), BTreeSet<u32>> = BTreeMap::new();
    for (q, a, next) in triples {
        transitions.entry((q, a)).or_default().insert(next);
    }
    let mut finals = BTreeSet::new();
    for _ in 0..rng.random_range(0..=num_states.min(3)) {
        finals.insert(rng.random_range(1..=num_states));
    }
    Ok(NfaSpec {
        num_states,
        num_symbols,
        input_len,
        initial: rng.random_range(1..=num_states),
        finals,
        transitions,
    })
}

pub(crate) fn token_width(token_count: u32) -> u32 {
    32 - token_count.leading_zeros()
}

pub(crate) fn token_string(value: u32, width: u32) -> String {
    (0..width).rev().map(|b| if value >> b & 1 == 1 { '1' } else { '0' }).collect()
}

/// Target of the token-grid shape: tokens `1..=token_count`, each in binary of
/// fixed width and followed by `#`. Pieces are generated as intervals of the
/// grid, so every piece occurs in the target exactly once, at the position its
/// first token dictates.
fn gen_uock(
    rng: &mut ChaCha8Rng,
    token_count: u32,
    piece_count: u32,
) -> Result<UockInstance, GenError> {
    if token_count == 0 && piece_count > 0 {
        return Err(GenError("pieces need a nonempty token grid".into()));
    }
    let width = token_width(token_count);
    let mut target = String::new();
    for v in 1..=token_count {
        target.push_str(&token_string(v, width));
        target.push('#');
    }

    let mut intervals = Vec::with_capacity(piece_count as usize);
    if piece_count > 0 && rng.random_bool(0.5) {
        let mut cut = 0;
        while cut < token_count && (intervals.len() as u32) < piece_count {
            let next = rng.random_range(cut + 1..=token_count);
            intervals.push((cut, next));
            cut = next;
        }
        if cut < token_count {
            let last = intervals.last_mut().expect("loop pushed at least one interval");
            last.1 = token_count;
        }
    }
    while (intervals.len() as u32) < piece_count {
        let a = rng.random_range(0..token_count);
        let b = rng.random_range(a + 1..=token_count);
        intervals.push((a, b));
    }
    intervals.sort_unstable();

    let pieces = intervals
        .into_iter()
        .map(|(a, b)| {
            let mut piece = String::new();
            for v in a + 1..=b {
                piece.push_str(&token_string(v, width));
                piece.push('#');
            }
            piece
        })
        .collect();
    Ok(UockInstance { target, pieces })
}

fn gen_hpp(rng: &mut ChaCha8Rng, dim: u32, length_d: u32) -> Result<HppInstance, GenError> {
    if length_d == 0 || length_d > dim {
        return Err(GenError(format!("sequence length {length_d} out of range 1..={dim}")));
    }
    let matrix = (0..dim)
        .map(|_| (0..dim).map(|_| rng.random_range(1..=dim)).collect())
        .collect();
    Ok(HppInstance { dim, length_d, start: rng.random_range(1..=dim), matrix })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_reproduces_the_instance() {
        let spec = GenSpec::Cnf { num_vars: 6, num_clauses: 10, occurrence_cap: Some(3) };
        assert_eq!(gen_random(&spec, 7).unwrap(), gen_random(&spec, 7).unwrap());
    }

    #[test]
    fn cnf_respects_cap_and_counts() {
        let spec = GenSpec::Cnf { num_vars: 5, num_clauses: 7, occurrence_cap: Some(3) };
        for seed in 0..20 {
            let inst = gen_random(&spec, seed).unwrap();
            let InstanceData::Cnf(f) = &inst.data else { panic!("wrong family") };
            assert_eq!(f.num_vars, 5);
            assert_eq!(f.clauses.len(), 7);
            assert!(f.max_occurrence() <= 3, "seed {seed}");
            assert!(inst.validate_capped(3).is_empty());
        }
    }

    #[test]
    fn digraph_respects_cap_and_counts() {
        let spec = GenSpec::Digraph { num_vertices: 6, num_edges: 9, degree_cap: Some(3) };
        for seed in 0..20 {
            let inst = gen_random(&spec, seed).unwrap();
            let InstanceData::Digraph(g) = &inst.data else { panic!("wrong family") };
            assert_eq!(g.edges.len(), 9);
            assert!(g.max_degree() <= 3, "seed {seed}");
            assert!(inst.validate().is_empty());
        }
    }

    #[test]
    fn lp_respects_column_cap() {
        let spec = GenSpec::Lp { num_rows: 8, num_cols: 4, column_cap: Some(3) };
        for seed in 0..20 {
            let inst = gen_random(&spec, seed).unwrap();
            let InstanceData::Lp(lp) = &inst.data else { panic!("wrong family") };
            assert_eq!(lp.rows.len(), 8);
            assert!(lp.max_column_count() <= 3, "seed {seed}");
            assert!(inst.validate().is_empty());
        }
    }

    #[test]
    fn uock_instances_satisfy_unique_occurrence() {
        let spec = GenSpec::Uock { token_count: 6, piece_count: 8 };
        for seed in 0..20 {
            let inst = gen_random(&spec, seed).unwrap();
            assert!(inst.validate().is_empty(), "seed {seed}");
        }
    }

    #[test]
    fn infeasible_budgets_are_rejected() {
        assert!(gen_random(&GenSpec::Cnf { num_vars: 1, num_clauses: 4, occurrence_cap: Some(2) }, 0).is_err());
        assert!(gen_random(&GenSpec::Digraph { num_vertices: 2, num_edges: 5, degree_cap: None }, 0).is_err());
        assert!(gen_random(&GenSpec::Digraph { num_vertices: 4, num_edges: 8, degree_cap: Some(3) }, 0).is_err());
        assert!(gen_random(&GenSpec::Nfa { num_states: 1, num_symbols: 1, input_len: 1, num_transitions: 2 }, 0).is_err());
        assert!(gen_random(&GenSpec::Hpp { dim: 2, length_d: 3 }, 0).is_err());
    }

    #[test]
    fn nfa_and_hpp_generate_valid_instances() {
        for seed in 0..10 {
            let nfa = gen_random(
                &GenSpec::Nfa { num_states: 5, num_symbols: 3, input_len: 4, num_transitions: 10 },
                seed,
            )
            .unwrap();
            assert!(nfa.validate().is_empty());
            let hpp = gen_random(&GenSpec::Hpp { dim: 4, length_d: 3 }, seed).unwrap();
            assert!(hpp.validate().is_empty());
        }
    }
}
