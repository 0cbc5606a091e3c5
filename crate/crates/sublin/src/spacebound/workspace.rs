//! Bit-level accounting of working storage and a step budget.

use thiserror::Error;

/// Environment variable that overrides the default step budget.
pub const STEP_BUDGET_ENV: &str = "SUBLIN_STEP_BUDGET";

pub const DEFAULT_STEP_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("step budget of {budget} exhausted")]
pub struct BudgetExhausted {
    pub budget: u64,
}

/// Bits needed to index into a domain of the given size: 0 for domains of at
/// most one element, otherwise the ceiling of the base-2 logarithm.
pub fn index_bits(domain: u64) -> u64 {
    if domain <= 1 {
        0
    } else {
        u64::from(u64::BITS - (domain - 1).leading_zeros())
    }
}

/// Working storage meter. Algorithms charge every bit of state they keep
/// (`alloc`/`free`) and one step per unit of work (`step`); the input itself
/// is reached only through read-only oracles and is never charged. `peak_bits`
/// is the quantity the space claims in this crate are about.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MeteredWorkspace {
    live_bits: u64,
    peak_bits: u64,
    step_count: u64,
    step_budget: u64,
}

impl MeteredWorkspace {
    pub fn new(step_budget: u64) -> MeteredWorkspace {
        MeteredWorkspace { live_bits: 0, peak_bits: 0, step_count: 0, step_budget }
    }

    /// Budget from `SUBLIN_STEP_BUDGET`, or the default when unset or
    /// unparsable.
    pub fn from_env() -> MeteredWorkspace {
        let budget = std::env::var(STEP_BUDGET_ENV)
            .ok()
            .and_then(|v| v.parse().ok())
            .unwrap_or(DEFAULT_STEP_BUDGET);
        MeteredWorkspace::new(budget)
    }

    pub fn alloc(&mut self, bits: u64) {
        self.live_bits += bits;
        self.peak_bits = self.peak_bits.max(self.live_bits);
    }

    pub fn free(&mut self, bits: u64) {
        debug_assert!(bits <= self.live_bits, "freeing more bits than are live");
        self.live_bits -= bits;
    }

    pub fn step(&mut self) -> Result<(), BudgetExhausted> {
        if self.step_count == self.step_budget {
            return Err(BudgetExhausted { budget: self.step_budget });
        }
        self.step_count += 1;
        Ok(())
    }

    pub fn live_bits(&self) -> u64 {
        self.live_bits
    }

    pub fn peak_bits(&self) -> u64 {
        self.peak_bits
    }

    pub fn steps(&self) -> u64 {
        self.step_count
    }

    pub fn budget(&self) -> u64 {
        self.step_budget
    }
}
