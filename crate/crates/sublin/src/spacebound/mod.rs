//! Working-storage-metered decision procedures.
//!
//! The algorithms here are written against a bit-counting [`MeteredWorkspace`]
//! and read their input only through [`AdjacencyOracle`] queries, so the peak
//! bit count measures the working storage of the algorithm itself, not the
//! input. A step budget (default [`DEFAULT_STEP_BUDGET`], overridable through
//! the `SUBLIN_STEP_BUDGET` environment variable) makes the steep
//! steps-for-space tradeoffs observable instead of just slow: a run either
//! answers or reports exhaustion.

mod oracle;
mod reach;
mod twosat;
mod workspace;

pub use oracle::{neg_vertex, pos_vertex, AdjacencyOracle, ExplicitGraph, ImplicationGraph};
pub use reach::{reach_bfs, reach_dfs_limited, reach_hybrid, reach_savitch, reach_with};
pub use twosat::twosat_space;
pub use workspace::{
    index_bits, BudgetExhausted, MeteredWorkspace, DEFAULT_STEP_BUDGET, STEP_BUDGET_ENV,
};

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::instances::{Cnf2Formula, Digraph};

/// Which reachability procedure to run. Parses from `bfs`, `savitch`, or
/// `hybrid:<len>` with a positive segment length.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Bfs,
    Savitch,
    Hybrid { threshold: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown strategy `{0}`, expected bfs, savitch, or hybrid:<len>")]
pub struct StrategyParseError(pub String);

impl FromStr for Strategy {
    type Err = StrategyParseError;

    fn from_str(text: &str) -> Result<Strategy, StrategyParseError> {
        match text {
            "bfs" => return Ok(Strategy::Bfs),
            "savitch" => return Ok(Strategy::Savitch),
            _ => {}
        }
        if let Some(len) = text.strip_prefix("hybrid:") {
            if let Ok(threshold) = len.parse() {
                if threshold >= 1 {
                    return Ok(Strategy::Hybrid { threshold });
                }
            }
        }
        Err(StrategyParseError(text.to_string()))
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Strategy::Bfs => f.write_str("bfs"),
            Strategy::Savitch => f.write_str("savitch"),
            Strategy::Hybrid { threshold } => write!(f, "hybrid:{threshold}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Answer {
    Yes,
    No,
    Exhausted,
}

impl Answer {
    fn from_run(run: Result<bool, BudgetExhausted>) -> Answer {
        match run {
            Ok(true) => Answer::Yes,
            Ok(false) => Answer::No,
            Err(_) => Answer::Exhausted,
        }
    }
}

/// Space and step metering of one run. `n` and `m` are the instance's primary
/// and secondary size parameters (vertices and edges, or variables and
/// clauses).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceReport {
    pub algorithm: String,
    pub n: u64,
    pub m: u64,
    pub peak_bits: u64,
    pub steps: u64,
    pub answer: Answer,
}

pub fn measure_reach(graph: &Digraph, strategy: Strategy, step_budget: u64) -> SpaceReport {
    let oracle = ExplicitGraph::new(graph);
    let mut ws = MeteredWorkspace::new(step_budget);
    let run = reach_with(strategy, &oracle, &mut ws);
    SpaceReport {
        algorithm: strategy.to_string(),
        n: graph.num_vertices as u64,
        m: graph.edges.len() as u64,
        peak_bits: ws.peak_bits(),
        steps: ws.steps(),
        answer: Answer::from_run(run),
    }
}

pub fn measure_twosat(formula: &Cnf2Formula, strategy: Strategy, step_budget: u64) -> SpaceReport {
    let mut ws = MeteredWorkspace::new(step_budget);
    let run = twosat_space(formula, strategy, &mut ws);
    SpaceReport {
        algorithm: strategy.to_string(),
        n: formula.num_vars as u64,
        m: formula.clauses.len() as u64,
        peak_bits: ws.peak_bits(),
        steps: ws.steps(),
        answer: Answer::from_run(run),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strategies_parse_and_print() {
        for text in ["bfs", "savitch", "hybrid:4"] {
            assert_eq!(text.parse::<Strategy>().unwrap().to_string(), text);
        }
        assert!("hybrid:0".parse::<Strategy>().is_err());
        assert!("hybrid:".parse::<Strategy>().is_err());
        assert!("dfs".parse::<Strategy>().is_err());
    }

    #[test]
    fn reports_serialize_shallowly() {
        let graph = Digraph { num_vertices: 2, edges: vec![(1, 2)], source: 1, target: 2 };
        let report = measure_reach(&graph, Strategy::Bfs, 1000);
        let json = serde_json::to_string(&report).unwrap();
        assert!(json.contains("\"answer\":\"yes\""), "{json}");
        assert_eq!(serde_json::from_str::<SpaceReport>(&json).unwrap(), report);
    }

    #[test]
    fn exhausted_runs_are_reported_as_such() {
        let graph = Digraph { num_vertices: 4, edges: vec![(1, 2)], source: 1, target: 4 };
        let report = measure_reach(&graph, Strategy::Savitch, 3);
        assert_eq!(report.answer, Answer::Exhausted);
        assert_eq!(report.steps, 3);
    }
}
