//! Decision and search procedures for six interreducible problem families:
//! bounded-occurrence 2CNF satisfiability, bounded-degree s-t reachability,
//! {0,1} feasibility of two-variable linear constraint systems, accepted-string
//! search for length-bounded NFAs, unique-occurrence concatenation cover, and
//! weight-maximal hop sequences.
//!
//! The crate is organized around:
//!
//! - [`instances`]: instance types, text formats, validation, size parameters,
//!   and seeded random generation;
//! - [`solvers`]: reference solvers plus brute-force oracles used to check them;
//! - [`spacebound`]: reachability strategies that meter working storage in bits
//!   against an explicit budget, and a satisfiability decision built on them;
//! - [`reductions`]: instance translations between the families, with declared
//!   size-bound contracts and an empirical verification harness;
//! - [`snl`]: an evaluator for a small second-order existential logic over
//!   indexed relations, with a machine-acceptance formula builder;
//! - [`report`]: serializable result records shared with the command line tool.

pub mod instances;
pub mod rational;
pub mod reductions;
pub mod report;
pub mod snl;
pub mod solvers;
pub mod spacebound;
