//! Encodings of s-t reachability into the three search problems: accepting
//! strings of an automaton, increasing-index cover sequences, and
//! maximum-weight index sequences.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::instances::{token_string, token_width, Digraph, HppInstance, NfaSpec, UockInstance};

use super::graph::layered_square;

/// A construction was fed an instance outside its domain.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{0}")]
pub struct ReductionError(pub String);

/// Walks become runs: states are vertices, symbol `i` moves to the i-th
/// outgoing neighbor in ascending order, the initial state is the source, and
/// the sole final state is the target. Acceptance by some prefix of a run of
/// length `num_vertices` is then exactly reachability. Needs out-degrees at
/// most 4, the alphabet size; the product size parameter is exactly
/// `4 * num_vertices^2`.
pub fn dstcon_to_1nfa(graph: &Digraph) -> Result<NfaSpec, ReductionError> {
    let neighbors = graph.out_neighbors();
    let mut transitions = BTreeMap::new();
    for (v, list) in neighbors.iter().enumerate() {
        if list.len() > 4 {
            return Err(ReductionError(format!(
                "vertex {} has out-degree {}, more than the 4 alphabet symbols can index",
                v + 1,
                list.len()
            )));
        }
        for (i, &next) in list.iter().enumerate() {
            transitions.insert((v as u32 + 1, i as u32), BTreeSet::from([next]));
        }
    }
    Ok(NfaSpec {
        num_states: graph.num_vertices,
        num_symbols: 4,
        input_len: graph.num_vertices,
        initial: graph.source,
        finals: BTreeSet::from([graph.target]),
        transitions,
    })
}

/// Layers the graph, then spells the vertex range between the layered source
/// and target as a grid of fixed-width binary tokens, each closed by `#`. The
/// piece of a layered edge `(a, b)` spells the tokens `a+1 ..= b`, so pieces
/// chain exactly like edges, and sorting pieces lexicographically makes every
/// chain's indices strictly increase. Tokens are consecutive distinct values,
/// hence every piece occurs in the target at most once.
pub fn dstcon_to_uock(graph: &Digraph) -> UockInstance {
    let layered = layered_square(graph);
    let width = token_width(layered.num_vertices);
    let block = |v: u32| {
        let mut b = token_string(v, width);
        b.push('#');
        b
    };
    let (s, t) = (layered.source, layered.target);
    let target: String = (s + 1..=t).map(block).collect();
    let mut spans: Vec<(u32, u32)> = layered
        .edges
        .iter()
        .copied()
        .filter(|&(a, b)| s <= a && b <= t)
        .collect();
    spans.sort_unstable();
    let pieces = spans.into_iter().map(|(a, b)| (a + 1..=b).map(block).collect()).collect();
    UockInstance { target, pieces }
}

/// Layers the graph, then turns reachability into a weight threshold: layered
/// edges and the layered target's diagonal cell weigh `num_vertices`, all
/// other cells weigh 1, and sequences have the full length `num_vertices^2`.
/// The maximum value is `(num_vertices^2 - 1) * num_vertices` exactly when
/// the target is reachable, and at least `num_vertices - 1` lower otherwise:
/// only a run to the layered target followed by waiting on its diagonal
/// avoids every weight-1 cell.
pub fn dstcon_to_maxhpp(graph: &Digraph) -> HppInstance {
    let layered = layered_square(graph);
    let n = graph.num_vertices;
    let dim = layered.num_vertices;
    let mut matrix = vec![vec![1u32; dim as usize]; dim as usize];
    for &(u, v) in &layered.edges {
        matrix[(u - 1) as usize][(v - 1) as usize] = n;
    }
    let t = (layered.target - 1) as usize;
    matrix[t][t] = n;
    HppInstance { dim, length_d: dim, start: layered.source, matrix }
}

/// The sequence value that witnesses reachability in [`dstcon_to_maxhpp`]'s
/// output for a graph with this many vertices.
pub fn maxhpp_yes_value(num_vertices: u32) -> u64 {
    let dim = num_vertices as u64 * num_vertices as u64;
    (dim - 1) * num_vertices as u64
}
