//! Reachability decisions used as ground truth by the reduction checks.
//!
//! Two deliberately different algorithms are provided so each can validate
//! the other: a queue-based search and a repeated-squaring closure.

use std::collections::VecDeque;

use crate::instances::Digraph;

pub fn reach_decide(graph: &Digraph) -> bool {
    let adj = graph.out_neighbors();
    let mut seen = vec![false; graph.num_vertices as usize];
    let mut queue = VecDeque::new();
    seen[(graph.source - 1) as usize] = true;
    queue.push_back(graph.source);
    while let Some(v) = queue.pop_front() {
        if v == graph.target {
            return true;
        }
        for &w in &adj[(v - 1) as usize] {
            if !seen[(w - 1) as usize] {
                seen[(w - 1) as usize] = true;
                queue.push_back(w);
            }
        }
    }
    false
}

/// Decides reachability by squaring the reflexive adjacency matrix
/// `ceil(log2 n)` times.
pub fn reach_via_closure(graph: &Digraph) -> bool {
    let n = graph.num_vertices as usize;
    let mut reach = vec![vec![false; n]; n];
    for (v, row) in reach.iter_mut().enumerate() {
        row[v] = true;
    }
    for &(u, v) in &graph.edges {
        reach[(u - 1) as usize][(v - 1) as usize] = true;
    }
    let rounds = usize::BITS - (n - 1).max(1).leading_zeros();
    for _ in 0..rounds {
        let mut squared = vec![vec![false; n]; n];
        for (out_row, head_row) in squared.iter_mut().zip(&reach) {
            for (mid_row, &through) in reach.iter().zip(head_row) {
                if through {
                    for (cell, &tail) in out_row.iter_mut().zip(mid_row) {
                        *cell = *cell || tail;
                    }
                }
            }
        }
        reach = squared;
    }
    reach[(graph.source - 1) as usize][(graph.target - 1) as usize]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{gen_random, GenSpec, InstanceData};

    fn graph(text: &str) -> Digraph {
        Digraph::parse(text).unwrap()
    }

    #[test]
    fn source_reaches_itself() {
        let g = graph("p dstcon 1 0 1 1\n");
        assert!(reach_decide(&g));
        assert!(reach_via_closure(&g));
    }

    #[test]
    fn direction_matters() {
        let g = graph("p dstcon 3 2 1 3\ne 1 2\ne 3 2\n");
        assert!(!reach_decide(&g));
        assert!(!reach_via_closure(&g));
        let g = graph("p dstcon 3 2 1 3\ne 1 2\ne 2 3\n");
        assert!(reach_decide(&g));
        assert!(reach_via_closure(&g));
    }

    #[test]
    fn the_two_algorithms_agree_on_random_graphs() {
        for seed in 0..80 {
            let n = 1 + (seed % 7) as u32;
            let spec = GenSpec::Digraph {
                num_vertices: n,
                num_edges: (seed % (n as u64 * n as u64 / 2 + 1)) as u32,
                degree_cap: None,
            };
            let inst = gen_random(&spec, seed).unwrap();
            let InstanceData::Digraph(g) = &inst.data else { unreachable!() };
            assert_eq!(reach_decide(g), reach_via_closure(g), "seed {seed}");
        }
    }
}
