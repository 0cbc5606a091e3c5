//! Structural digraph translations: the layered product that makes vertex
//! numbers increase along every edge, and the gadget expansion that caps
//! degrees at 3.

use crate::instances::Digraph;

/// Vertex `j` in layer `i` of the layered product, both 1-based.
pub fn layered_vertex(num_vertices: u32, layer: u32, v: u32) -> u32 {
    (layer - 1) * num_vertices + v
}

/// The n-layer product of a graph with itself: layer i holds a copy of every
/// vertex, each edge is replayed between consecutive layers, and the target
/// additionally steps from each layer to the next so that shorter paths can
/// wait there. Numbering layers bottom-up makes every edge go from a smaller
/// to a strictly larger vertex number. The source is asked in layer 1 and the
/// target in layer n, which preserves reachability; the output has exactly
/// n^2 vertices.
pub fn layered_square(graph: &Digraph) -> Digraph {
    let n = graph.num_vertices;
    let num_vertices = n.checked_mul(n).expect("layered vertex ids fit in u32");
    let pack = |layer: u32, v: u32| layered_vertex(n, layer, v);
    let target_loops = graph.edges.contains(&(graph.target, graph.target));
    let mut edges = Vec::new();
    for layer in 1..n {
        for &(u, v) in &graph.edges {
            edges.push((pack(layer, u), pack(layer + 1, v)));
        }
        if !target_loops {
            edges.push((pack(layer, graph.target), pack(layer + 1, graph.target)));
        }
    }
    Digraph { num_vertices, edges, source: graph.source, target: pack(n, graph.target) }
}

/// Chain node count for a vertex of the given degree; degree 4 or more needs
/// `degree - 2` nodes so that the head and tail carry two outside connections
/// each and the middle nodes one.
fn chain_len(degree: u32) -> u32 {
    if degree <= 3 { 1 } else { degree - 2 }
}

/// Chain node (0-based) holding outside connection slot `k` of a vertex with
/// `degree` slots total.
fn slot_node(len: u32, degree: u32, k: u32) -> u32 {
    if len == 1 || k < 2 {
        0
    } else if k >= degree - 2 {
        len - 1
    } else {
        k - 1
    }
}

/// Caps every degree at 3 by replacing each vertex with a forward chain of
/// nodes. A vertex's incoming edges attach to the earliest slots of its chain
/// and its outgoing edges to the latest, so anything that enters the chain can
/// walk forward to every exit; the source maps to the head of its chain and
/// the target to the tail. Graphs already within the cap pass through
/// unchanged. Isolated vertices other than the source and target are dropped,
/// which keeps the output vertex count at most `2 * edges + 2`.
pub fn degree_reduce(graph: &Digraph) -> Digraph {
    if graph.max_degree() <= 3 {
        return graph.clone();
    }
    let n = graph.num_vertices as usize;
    let degrees = graph.degrees();
    let mut in_degrees = vec![0u32; n];
    for &(_, v) in &graph.edges {
        in_degrees[(v - 1) as usize] += 1;
    }

    let mut base = vec![0u32; n];
    let mut next_id = 1u32;
    for v in 0..n {
        let vertex = v as u32 + 1;
        if degrees[v] == 0 && vertex != graph.source && vertex != graph.target {
            continue;
        }
        base[v] = next_id;
        next_id += chain_len(degrees[v]);
    }

    let mut edges = Vec::new();
    for v in 0..n {
        if base[v] != 0 {
            for i in 1..chain_len(degrees[v]) {
                edges.push((base[v] + i - 1, base[v] + i));
            }
        }
    }
    let mut in_rank = vec![0u32; n];
    let mut out_rank = vec![0u32; n];
    for &(u, v) in &graph.edges {
        let (ui, vi) = ((u - 1) as usize, (v - 1) as usize);
        let out_slot = in_degrees[ui] + out_rank[ui];
        out_rank[ui] += 1;
        let in_slot = in_rank[vi];
        in_rank[vi] += 1;
        edges.push((
            base[ui] + slot_node(chain_len(degrees[ui]), degrees[ui], out_slot),
            base[vi] + slot_node(chain_len(degrees[vi]), degrees[vi], in_slot),
        ));
    }

    let s = (graph.source - 1) as usize;
    let t = (graph.target - 1) as usize;
    Digraph {
        num_vertices: next_id - 1,
        edges,
        source: base[s],
        target: base[t] + chain_len(degrees[t]) - 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{gen_random, GenSpec, InstanceData};
    use crate::solvers::reach_decide;

    fn random_digraph(seed: u64, num_edges: u32, cap: Option<u32>) -> Digraph {
        let spec = GenSpec::Digraph { num_vertices: 6, num_edges, degree_cap: cap };
        match gen_random(&spec, seed).unwrap().data {
            InstanceData::Digraph(g) => g,
            _ => unreachable!(),
        }
    }

    #[test]
    fn layering_preserves_reachability() {
        for seed in 0..60 {
            let g = random_digraph(seed, seed as u32 % 12, None);
            let layered = layered_square(&g);
            assert_eq!(layered.num_vertices, g.num_vertices * g.num_vertices);
            assert!(layered.validate().is_empty(), "seed {seed}");
            assert_eq!(reach_decide(&layered), reach_decide(&g), "seed {seed}");
            assert!(layered.edges.iter().all(|&(u, v)| u < v));
        }
    }

    #[test]
    fn layering_replays_edges_between_consecutive_layers() {
        let g = Digraph::new(2, vec![(1, 2)], 1, 2);
        let layered = layered_square(&g);
        assert_eq!(layered.num_vertices, 4);
        assert_eq!(layered.edges, vec![(1, 4), (2, 4)]);
        assert_eq!((layered.source, layered.target), (1, 4));
        assert!(reach_decide(&layered));
    }

    #[test]
    fn layering_merges_the_wait_edge_with_a_target_loop() {
        let g = Digraph::new(2, vec![(2, 2)], 1, 2);
        let layered = layered_square(&g);
        assert!(layered.validate().is_empty());
        assert_eq!(layered.edges, vec![(2, 4)]);
    }

    #[test]
    fn single_vertex_graph_layers_to_itself() {
        let g = Digraph::new(1, vec![], 1, 1);
        let layered = layered_square(&g);
        assert_eq!(layered, g);
    }

    #[test]
    fn degree_reduction_is_identity_within_the_cap() {
        let g = random_digraph(5, 9, Some(3));
        assert_eq!(degree_reduce(&g), g);
    }

    #[test]
    fn degree_reduction_caps_degrees_and_preserves_reachability() {
        for seed in 0..60 {
            let g = random_digraph(seed, 4 + seed as u32 % 15, None);
            let reduced = degree_reduce(&g);
            assert!(reduced.validate().is_empty(), "seed {seed}");
            assert!(reduced.max_degree() <= 3, "seed {seed}");
            assert!(reduced.num_vertices as u64 <= 2 * g.edges.len() as u64 + 2);
            assert_eq!(reach_decide(&reduced), reach_decide(&g), "seed {seed}");
        }
    }

    #[test]
    fn star_center_becomes_a_chain() {
        let edges = vec![(1, 2), (1, 3), (1, 4), (1, 5), (6, 1)];
        let g = Digraph::new(6, edges, 6, 5);
        let reduced = degree_reduce(&g);
        // Vertex 1 has degree 5, hence a 3-node chain; the others keep one node.
        assert_eq!(reduced.num_vertices, 8);
        assert!(reduced.max_degree() <= 3);
        assert!(reach_decide(&reduced));
    }

    #[test]
    fn isolated_endpoints_survive_reduction() {
        let g = Digraph::new(7, vec![(2, 3), (2, 4), (2, 5), (2, 6)], 1, 7);
        let reduced = degree_reduce(&g);
        assert!(!reach_decide(&reduced));
        assert_eq!(reach_decide(&reduced), reach_decide(&g));
        let h = Digraph::new(7, vec![(2, 3), (2, 4), (2, 5), (2, 6)], 7, 7);
        assert!(reach_decide(&degree_reduce(&h)));
    }

    #[test]
    fn self_loops_fold_into_the_chain() {
        let g = Digraph::new(3, vec![(1, 1), (1, 2), (1, 3), (2, 1)], 2, 3);
        let reduced = degree_reduce(&g);
        assert!(reduced.validate().is_empty());
        assert!(reduced.max_degree() <= 3);
        assert_eq!(reach_decide(&reduced), reach_decide(&g));
    }
}
