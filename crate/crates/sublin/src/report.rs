//! Result records shared between the library and the command line tool.
//!
//! Everything here serializes to JSON with a fixed field order and no maps,
//! so identical runs produce byte-identical output.

use serde::{Deserialize, Serialize};

use crate::reductions::VerifyReport;
use crate::spacebound::SpaceReport;

/// One named size parameter of an instance, e.g. `m_cls` for clause counts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SizeEntry {
    pub param: String,
    pub value: u64,
}

/// Witness attached to a yes answer. Assignments and words are listed in
/// variable and position order; piece and vertex indices are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SolveWitness {
    Assignment(Vec<bool>),
    Word(Vec<u32>),
    Pieces(Vec<u32>),
    Tour(Vec<u32>),
}

/// Outcome of solving one instance. `value` is set for optimization runs,
/// `peak_bits` and `steps` only when a metered strategy was chosen.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveReport {
    pub problem: String,
    pub answer: String,
    pub value: Option<u64>,
    pub witness: Option<SolveWitness>,
    pub sizes: Vec<SizeEntry>,
    pub strategy: Option<String>,
    pub peak_bits: Option<u64>,
    pub steps: Option<u64>,
}

/// Outcome of applying one catalog reduction: the declared growth bound next
/// to the measured source and target sizes. `bound_applies` is false only
/// for conditional bounds evaluated outside their condition, in which case
/// `within_bound` carries no claim.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReduceReport {
    pub reduction: String,
    pub source_family: String,
    pub target_family: String,
    pub declared_k: u64,
    pub declared_exponent: u32,
    pub source_param: String,
    pub source_size: u64,
    pub target_param: String,
    pub target_size: u64,
    pub size_limit: u64,
    pub bound_applies: bool,
    pub within_bound: bool,
}

/// Aggregated verification run over one or all catalog entries.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyRun {
    pub exhaustive: Option<u32>,
    pub random: Option<u64>,
    pub seed: u64,
    pub reports: Vec<VerifyReport>,
    pub all_passed: bool,
}

/// One space-measurement sweep: every (strategy, size) cell in order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BenchRun {
    pub problem: String,
    pub seed: u64,
    pub step_budget: u64,
    pub rows: Vec<SpaceReport>,
}
