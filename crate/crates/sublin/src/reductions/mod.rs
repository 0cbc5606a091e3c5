//! Instance translations between the problem families, each carrying a
//! declared size bound that verification replays against brute-force answer
//! oracles.
//!
//! Nine one-instance translations form the [`catalog`]; a tenth decision
//! procedure asks many reachability queries per formula and is checked by
//! [`verify_reach_queries`]. Declared bounds relate the named size parameter
//! of the source to that of the target as `target <= k * source^e + k`; a
//! `complement` declaration means yes-instances map to no-instances and back.
//! Verification counts answer mismatches, bound violations, and structurally
//! invalid targets, and records the largest observed size-to-limit ratio.

mod catalog;
mod decl;
mod exhaustive;
mod graph;
mod linear;
mod search;
mod twosat;

pub use catalog::{
    catalog, catalog_entry, run_verification, sample_query_source, verify_reach_queries,
    verify_reach_queries_bounded, verify_reduction, CatalogEntry, QUERY_REDUCTION_NAME,
};
pub use exhaustive::{
    clause_universe, edge_universe, exhaustive_digraphs, exhaustive_formulas, exhaustive_lps,
    exhaustive_sources, lp_row_universe, EXHAUSTIVE_CLAUSE_LIMIT, EXHAUSTIVE_LP_ROW_LIMIT,
};
pub use decl::{compose_bounds, ReductionDecl, SizeBound, VerifyReport};
pub use graph::{degree_reduce, layered_square, layered_vertex};
pub use linear::{lp_to_2sat3, twosat3_to_lp};
pub use search::{
    dstcon_to_1nfa, dstcon_to_maxhpp, dstcon_to_uock, maxhpp_yes_value, ReductionError,
};
pub use twosat::{
    combine_query_answers, reach_to_2sat3, split_occurrences, twosat3_to_reach_queries,
};
