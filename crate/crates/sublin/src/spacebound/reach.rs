//! Reachability strategies with metered working storage.
//!
//! All strategies answer "does the oracle's source reach its target" and
//! charge every bit of state they keep. They sit at different points of the
//! space/steps tradeoff:
//!
//! - [`reach_bfs`]: a visited array, a queue buffer sized for every vertex,
//!   and two queue cursors, allocated up front. Linear in the vertex count,
//!   so its peak is large but its step count is small, and the peak depends
//!   on nothing but the vertex count.
//! - [`reach_savitch`]: midpoint recursion. Each call keeps one frame of
//!   three vertex indices; the peak is quadratic in the index width, at the
//!   price of a quasi-polynomial step count.
//! - [`reach_dfs_limited`]: depth-limited backtracking over a path stack of
//!   one index per level, with no visited set; exponential steps in the
//!   limit.
//! - [`reach_hybrid`]: midpoint recursion down to a threshold segment length,
//!   then depth-limited backtracking inside the segment. Threshold 1 behaves
//!   exactly like [`reach_savitch`]; a threshold at least `n - 1` is pure
//!   backtracking under one recursion frame.
pub use super::oracle::AdjacencyOracle;
use super::workspace::{index_bits, BudgetExhausted, MeteredWorkspace};
use super::Strategy;

pub fn reach_with(
    strategy: Strategy,
    oracle: &dyn AdjacencyOracle,
    ws: &mut MeteredWorkspace,
) -> Result<bool, BudgetExhausted> {
    match strategy {
        Strategy::Bfs => reach_bfs(oracle, ws),
        Strategy::Savitch => reach_savitch(oracle, ws),
        Strategy::Hybrid { threshold } => reach_hybrid(oracle, ws, threshold),
    }
}

pub fn reach_bfs(
    oracle: &dyn AdjacencyOracle,
    ws: &mut MeteredWorkspace,
) -> Result<bool, BudgetExhausted> {
    let n = oracle.num_vertices();
    let ib = index_bits(n as u64);
    let bits = n as u64 + n as u64 * ib + 2 * ib;
    ws.alloc(bits);
    let result = (|| -> Result<bool, BudgetExhausted> {
        let mut visited = vec![false; n as usize];
        let mut queue = vec![0u32; n as usize];
        let (mut head, mut tail) = (0usize, 0usize);
        visited[(oracle.source() - 1) as usize] = true;
        queue[tail] = oracle.source();
        tail += 1;
        while head < tail {
            ws.step()?;
            let v = queue[head];
            head += 1;
            if v == oracle.target() {
                return Ok(true);
            }
            for w in 1..=n {
                if oracle.has_edge(v, w, ws)? && !visited[(w - 1) as usize] {
                    visited[(w - 1) as usize] = true;
                    queue[tail] = w;
                    tail += 1;
                }
            }
        }
        Ok(false)
    })();
    if result.is_ok() {
        ws.free(bits);
    }
    result
}

/// Is there a path from `u` to `v` of length at most `len`? One frame of
/// three indices per recursion level; the midpoint split halves `len`, so at
/// most `index_bits(n) + 1` frames are ever live.
fn savitch_bounded(
    oracle: &dyn AdjacencyOracle,
    ws: &mut MeteredWorkspace,
    u: u32,
    v: u32,
    len: u64,
    frame_bits: u64,
) -> Result<bool, BudgetExhausted> {
    ws.alloc(frame_bits);
    let result = (|| -> Result<bool, BudgetExhausted> {
        ws.step()?;
        if u == v {
            return Ok(true);
        }
        if len == 0 {
            return Ok(false);
        }
        if len == 1 {
            return oracle.has_edge(u, v, ws);
        }
        for w in 1..=oracle.num_vertices() {
            ws.step()?;
            if savitch_bounded(oracle, ws, u, w, len.div_ceil(2), frame_bits)?
                && savitch_bounded(oracle, ws, w, v, len / 2, frame_bits)?
            {
                return Ok(true);
            }
        }
        Ok(false)
    })();
    if result.is_ok() {
        ws.free(frame_bits);
    }
    result
}

pub fn reach_savitch(
    oracle: &dyn AdjacencyOracle,
    ws: &mut MeteredWorkspace,
) -> Result<bool, BudgetExhausted> {
    let n = oracle.num_vertices();
    let frame_bits = 3 * index_bits(n as u64);
    savitch_bounded(oracle, ws, oracle.source(), oracle.target(), (n as u64).saturating_sub(1), frame_bits)
}

/// Backtracking search for a path from `from` to `to` of length at most
/// `limit`, storing one vertex index per level and nothing else. Levels are
/// revisited freely; the limit is what makes the search finite.
fn dfs_bounded(
    oracle: &dyn AdjacencyOracle,
    ws: &mut MeteredWorkspace,
    from: u32,
    to: u32,
    limit: u32,
) -> Result<bool, BudgetExhausted> {
    let n = oracle.num_vertices();
    let ib = index_bits(n as u64);
    let bits = limit as u64 * ib + 2 * ib;
    ws.alloc(bits);
    let result = (|| -> Result<bool, BudgetExhausted> {
        if from == to {
            return Ok(true);
        }
        if limit == 0 {
            return Ok(false);
        }
        // cursors[d] is the vertex currently placed at path position d + 1
        // (0 when position d + 1 is still unexplored on this visit).
        let mut cursors = vec![0u32; limit as usize];
        let mut depth = 0usize;
        loop {
            let parent = if depth == 0 { from } else { cursors[depth - 1] };
            let mut advanced = false;
            let mut w = cursors[depth] + 1;
            while w <= n {
                ws.step()?;
                if oracle.has_edge(parent, w, ws)? {
                    if w == to {
                        return Ok(true);
                    }
                    cursors[depth] = w;
                    advanced = true;
                    break;
                }
                w += 1;
            }
            if advanced {
                if depth + 1 < limit as usize {
                    depth += 1;
                    cursors[depth] = 0;
                }
            } else if depth == 0 {
                return Ok(false);
            } else {
                cursors[depth] = 0;
                depth -= 1;
            }
        }
    })();
    if result.is_ok() {
        ws.free(bits);
    }
    result
}

pub fn reach_dfs_limited(
    oracle: &dyn AdjacencyOracle,
    ws: &mut MeteredWorkspace,
    limit: u32,
) -> Result<bool, BudgetExhausted> {
    dfs_bounded(oracle, ws, oracle.source(), oracle.target(), limit)
}

fn hybrid_bounded(
    oracle: &dyn AdjacencyOracle,
    ws: &mut MeteredWorkspace,
    u: u32,
    v: u32,
    len: u64,
    threshold: u32,
    frame_bits: u64,
) -> Result<bool, BudgetExhausted> {
    ws.alloc(frame_bits);
    let result = (|| -> Result<bool, BudgetExhausted> {
        ws.step()?;
        if u == v {
            return Ok(true);
        }
        if len == 0 {
            return Ok(false);
        }
        if len == 1 {
            return oracle.has_edge(u, v, ws);
        }
        if len <= threshold as u64 {
            return dfs_bounded(oracle, ws, u, v, len as u32);
        }
        for w in 1..=oracle.num_vertices() {
            ws.step()?;
            if hybrid_bounded(oracle, ws, u, w, len.div_ceil(2), threshold, frame_bits)?
                && hybrid_bounded(oracle, ws, w, v, len / 2, threshold, frame_bits)?
            {
                return Ok(true);
            }
        }
        Ok(false)
    })();
    if result.is_ok() {
        ws.free(frame_bits);
    }
    result
}

pub fn reach_hybrid(
    oracle: &dyn AdjacencyOracle,
    ws: &mut MeteredWorkspace,
    threshold: u32,
) -> Result<bool, BudgetExhausted> {
    let n = oracle.num_vertices();
    let frame_bits = 3 * index_bits(n as u64);
    hybrid_bounded(
        oracle,
        ws,
        oracle.source(),
        oracle.target(),
        (n as u64).saturating_sub(1),
        threshold,
        frame_bits,
    )
}

#[cfg(test)]
mod tests {
    use super::super::oracle::ExplicitGraph;
    use super::*;
    use crate::instances::{gen_random, Digraph, GenSpec, InstanceData};
    use crate::solvers::reach_decide;

    fn line_graph(n: u32) -> Digraph {
        let edges = (1..n).map(|v| (v, v + 1)).collect();
        Digraph { num_vertices: n, edges, source: 1, target: n }
    }

    fn fresh() -> MeteredWorkspace {
        MeteredWorkspace::new(100_000_000)
    }

    #[test]
    fn bfs_peak_is_a_function_of_the_vertex_count_alone() {
        for (graph, expected) in [
            (line_graph(8), 8 + 8 * 3 + 2 * 3),
            (Digraph { num_vertices: 8, edges: vec![], source: 3, target: 5 }, 38),
            (line_graph(32), 32 + 32 * 5 + 2 * 5),
        ] {
            let mut ws = fresh();
            reach_bfs(&ExplicitGraph::new(&graph), &mut ws).unwrap();
            assert_eq!(ws.peak_bits(), expected);
            assert_eq!(ws.live_bits(), 0);
        }
    }

    #[test]
    fn savitch_peak_is_one_frame_when_source_equals_target() {
        let graph = Digraph { num_vertices: 8, edges: vec![], source: 5, target: 5 };
        let mut ws = fresh();
        assert!(reach_savitch(&ExplicitGraph::new(&graph), &mut ws).unwrap());
        assert_eq!(ws.peak_bits(), 3 * 3);
    }

    #[test]
    fn savitch_peak_on_an_eight_vertex_line() {
        let mut ws = fresh();
        assert!(reach_savitch(&ExplicitGraph::new(&line_graph(8)), &mut ws).unwrap());
        // One frame of three 3-bit indices per level, four levels deep.
        assert_eq!(ws.peak_bits(), 3 * 3 * 4);
        assert_eq!(ws.live_bits(), 0);
    }

    #[test]
    fn threshold_one_hybrid_matches_savitch_exactly() {
        for seed in 0..10 {
            let spec = GenSpec::Digraph { num_vertices: 6, num_edges: 7, degree_cap: None };
            let inst = gen_random(&spec, seed).unwrap();
            let InstanceData::Digraph(g) = &inst.data else { unreachable!() };
            let oracle = ExplicitGraph::new(g);
            let (mut a, mut b) = (fresh(), fresh());
            let left = reach_savitch(&oracle, &mut a).unwrap();
            let right = reach_hybrid(&oracle, &mut b, 1).unwrap();
            assert_eq!(left, right);
            assert_eq!(a, b, "seed {seed}");
        }
    }

    #[test]
    fn all_strategies_agree_with_the_solver() {
        for seed in 0..30 {
            let n = 2 + (seed % 7) as u32;
            let spec = GenSpec::Digraph { num_vertices: n, num_edges: seed as u32 % (2 * n), degree_cap: None };
            let inst = gen_random(&spec, seed).unwrap();
            let InstanceData::Digraph(g) = &inst.data else { unreachable!() };
            let expected = reach_decide(g);
            let oracle = ExplicitGraph::new(g);
            assert_eq!(reach_bfs(&oracle, &mut fresh()).unwrap(), expected, "seed {seed}");
            assert_eq!(reach_savitch(&oracle, &mut fresh()).unwrap(), expected, "seed {seed}");
            assert_eq!(reach_dfs_limited(&oracle, &mut fresh(), n - 1).unwrap(), expected, "seed {seed}");
            for threshold in [2, 4, 8] {
                assert_eq!(
                    reach_hybrid(&oracle, &mut fresh(), threshold).unwrap(),
                    expected,
                    "seed {seed} threshold {threshold}"
                );
            }
        }
    }

    #[test]
    fn exhaustion_is_not_an_answer() {
        let graph = line_graph(16);
        let oracle = ExplicitGraph::new(&graph);
        let mut tiny = MeteredWorkspace::new(10);
        assert!(reach_savitch(&oracle, &mut tiny).is_err());
        let mut enough = fresh();
        assert_eq!(reach_savitch(&oracle, &mut enough), Ok(true));
    }
}
