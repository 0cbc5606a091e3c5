//! Reference solvers and independent brute-force oracles.
//!
//! Every family gets a polynomial-time reference solver and, where search
//! spaces are small enough to enumerate, a brute-force oracle that shares no
//! code with it. The oracles exist to pin down expected answers in tests; the
//! reference solvers are what the command line and the reduction checks use.
//!
//! Witness-producing solvers are deterministic: reruns return the identical
//! witness, and where a brute-force oracle defines a lexicographic order the
//! solver's witness matches it only if documented on the solver.

mod hpp;
mod lp;
mod nfa;
mod reach;
mod twosat;
mod uock;

pub use hpp::{brute_maxhpp, solve_maxhpp};
pub use lp::{brute_lp, solve_lp};
pub use nfa::{nfa_accepts, search_1nfa};
pub use reach::{reach_decide, reach_via_closure};
pub use twosat::{brute_2sat, solve_2sat};
pub use uock::{brute_uock, search_uock};

use thiserror::Error;

use crate::rational::Rat;

/// Answer to a satisfiability question, with a witness when there is one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SatResult {
    Satisfiable(Vec<bool>),
    Unsatisfiable,
}

impl SatResult {
    pub fn is_satisfiable(&self) -> bool {
        matches!(self, SatResult::Satisfiable(_))
    }

    pub fn witness(&self) -> Option<&[bool]> {
        match self {
            SatResult::Satisfiable(w) => Some(w),
            SatResult::Unsatisfiable => None,
        }
    }
}

/// Value and witness sequence of an optimization run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OptResult {
    pub value: u64,
    pub sequence: Vec<u32>,
}

/// An instance promise (a precondition the solver relies on) is broken.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("instance breaks its promise: {0}")]
pub struct PromiseError(pub String);

/// Performance ratio is undefined when a positive optimum meets value zero.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("performance ratio of optimum {optimum} and value 0 is undefined")]
pub struct RatioError {
    pub optimum: u64,
}

/// Exact performance ratio `optimum / achieved` of a maximization run. Both
/// zero counts as ratio 1 (the trivial optimum was achieved).
pub fn perf_ratio(optimum: u64, achieved: u64) -> Result<Rat, RatioError> {
    if achieved == 0 {
        if optimum == 0 {
            return Ok(Rat::from_integer(1.into()));
        }
        return Err(RatioError { optimum });
    }
    Ok(Rat::new(optimum.into(), achieved.into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn ratio_values() {
        assert_eq!(perf_ratio(6, 3), Ok(rat(2, 1)));
        assert_eq!(perf_ratio(5, 5), Ok(rat(1, 1)));
        assert_eq!(perf_ratio(0, 0), Ok(rat(1, 1)));
        assert_eq!(perf_ratio(7, 2), Ok(rat(7, 2)));
        assert_eq!(perf_ratio(3, 0), Err(RatioError { optimum: 3 }));
    }
}
