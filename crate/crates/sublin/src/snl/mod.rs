//! Second-order formulas with explicitly bounded witnesses.
//!
//! The fragment quantifies one position-indexed relation `T` over a finite
//! universe, followed by a short block of element, index, and choice
//! variables. `eval_snl` checks a supplied witness, `decide_snl` searches
//! the witness space while accounting for every candidate, and the machine
//! submodule builds acceptance formulas whose functional witnesses are
//! exactly the accepting runs of a one-way machine.

mod ast;
mod eval;
mod machine;
mod model;

pub use ast::{
    Atom, ChoiceDomain, ChoiceVar, ElemTerm, ElemVar, IndexBound, IndexTerm, IndexVar, Matrix,
    SnlFormula, UniverseRef,
};
pub use eval::{decide_snl, eval_snl, SnlDecision, EVAL_BUDGET, SUBSET_BITS_LIMIT};
pub use machine::{
    acceptance_formula, always_accepting, build_acceptance_formula, even_parity, first_symbol_one,
    input_symbol, simulate, toy_machines, width, Delta, MachineStep, OneWayMachine, Packing,
    ToyMachine, UNIVERSE_CAP,
};
pub use model::{cert_size, Relation, SemanticModel, TRelation};

use thiserror::Error;

/// Failures across formula compilation, model validation, evaluation, and
/// machine encoding.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SnlError {
    #[error("duplicate variable `{0}`")]
    DuplicateVariable(String),
    #[error("unbound variable `{0}`")]
    UnboundVariable(String),
    #[error("formula refers to {kind} {index}, which the model lacks")]
    MissingReference { kind: &'static str, index: usize },
    #[error("too many variables of one sort: {0}")]
    TooManyVariables(usize),
    #[error("relation `{name}` has arity {expected}, used with {got} terms")]
    ArityMismatch {
        name: String,
        expected: usize,
        got: usize,
    },
    #[error("universe elements must be distinct")]
    DuplicateElement,
    #[error("witness pair ({position}, `{element}`) lies outside the model")]
    WitnessOutOfRange { position: u32, element: String },
    #[error("witness is not a total function at position {position}")]
    NotAFunction { position: u32 },
    #[error("choice set {index} has {len} elements, limit {limit}")]
    ChoiceSetTooLarge {
        index: usize,
        len: usize,
        limit: usize,
    },
    #[error("universe of {size} elements exceeds the bound {bound}")]
    UniverseTooLarge { size: usize, bound: u64 },
    #[error("candidate space exceeds the decision counters")]
    CandidateSpaceTooLarge,
    #[error("evaluation budget of {0} matrix evaluations exhausted")]
    BudgetExceeded(u64),
    #[error("subset search over {bits} bits exceeds the limit {limit}")]
    SubsetTooLarge { bits: u64, limit: u64 },
    #[error("configurations need {needed} digits, packing allows {allowed}")]
    SpaceBoundExceeded { needed: u32, allowed: u32 },
    #[error("head leaves the tape after `{0}`")]
    HeadOutOfRange(String),
    #[error("transition enters non-canonical accepting configuration `{0}`")]
    NonCanonicalAccept(String),
    #[error("work alphabet of size {0} cannot be packed into digits")]
    AlphabetSize(u32),
    #[error("size parameter {m} cannot cover the input of length {len} plus markers")]
    SizeParamTooSmall { m: usize, len: usize },
}
