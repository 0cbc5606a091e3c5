//! Declared contracts of instance translations and their empirical checking.

use serde::{Deserialize, Serialize};

use crate::instances::{Family, ParamInstance, SizeParamKind};
use crate::rational::Rat;

/// Declared growth `target <= k * source^exponent + k` between the size
/// parameters named in the owning declaration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SizeBound {
    pub k: u64,
    pub exponent: u32,
}

impl SizeBound {
    pub fn limit(&self, source_size: u64) -> u64 {
        self.k * source_size.pow(self.exponent) + self.k
    }

    pub fn holds(&self, source_size: u64, target_size: u64) -> bool {
        target_size <= self.limit(source_size)
    }
}

/// Bound composition: applying `first` then `second` to sizes. With a linear
/// second bound the constants add up sharply; in general the inner constant
/// is absorbed at the price of doubling inside the power.
pub fn compose_bounds(first: SizeBound, second: SizeBound) -> SizeBound {
    let exponent = first.exponent * second.exponent;
    let k = if second.exponent == 1 {
        first.k * second.k + second.k
    } else {
        second.k * (2 * first.k).pow(second.exponent)
    };
    SizeBound { k, exponent }
}

/// What a reduction promises: families, parameters, growth, answer parity,
/// and the shape caps it needs and provides.
///
/// `complement` means the target answer is the negation of the source answer.
/// `source_cap` is the occurrence/degree/column cap instances must satisfy to
/// be in the reduction's domain; `target_cap` is the cap every output is
/// guaranteed to satisfy. `bound_needs_edges_ge_vertices` restricts the size
/// bound (not correctness) to inputs with at least as many edges as vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionDecl {
    pub name: &'static str,
    pub source: Family,
    pub target: Family,
    pub complement: bool,
    pub source_param: SizeParamKind,
    pub target_param: SizeParamKind,
    pub bound: SizeBound,
    pub bound_needs_edges_ge_vertices: bool,
    pub source_cap: Option<u32>,
    pub target_cap: Option<u32>,
}

/// Outcome of replaying a reduction against its source oracle over a batch of
/// instances. A clean run has zeros in all three failure counters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub name: String,
    pub instances_checked: u64,
    pub answer_mismatches: u64,
    pub bound_violations: u64,
    pub target_invalid: u64,
    /// Largest observed `target size / declared limit`, as an exact fraction.
    pub max_bound_ratio: Option<String>,
}

impl VerifyReport {
    pub fn new(name: impl Into<String>) -> VerifyReport {
        VerifyReport {
            name: name.into(),
            instances_checked: 0,
            answer_mismatches: 0,
            bound_violations: 0,
            target_invalid: 0,
            max_bound_ratio: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.answer_mismatches == 0 && self.bound_violations == 0 && self.target_invalid == 0
    }
}

pub(crate) struct RatioTracker {
    best: Option<Rat>,
}

impl RatioTracker {
    pub(crate) fn new() -> RatioTracker {
        RatioTracker { best: None }
    }

    pub(crate) fn observe(&mut self, target_size: u64, limit: u64) {
        if limit == 0 {
            return;
        }
        let ratio = Rat::new(target_size.into(), limit.into());
        if self.best.as_ref().is_none_or(|b| ratio > *b) {
            self.best = Some(ratio);
        }
    }

    pub(crate) fn into_string(self) -> Option<String> {
        self.best.map(|r| crate::rational::format_rat(&r))
    }
}

/// One instance-level check shared by the catalog verifier and the query
/// verifier: size accounting plus target validation.
pub(crate) fn check_sizes_and_shape(
    decl: &ReductionDecl,
    source: &ParamInstance,
    target: &ParamInstance,
    report: &mut VerifyReport,
    ratios: &mut RatioTracker,
) {
    let shape_violations = match decl.target_cap {
        Some(cap) => target.validate_capped(cap),
        None => target.validate(),
    };
    if !shape_violations.is_empty() {
        report.target_invalid += 1;
    }

    let m1 = source.size_param(decl.source_param).expect("declared source parameter applies");
    let m2 = target.size_param(decl.target_param).expect("declared target parameter applies");
    let bound_applies = if decl.bound_needs_edges_ge_vertices {
        let edges = source.size_param(SizeParamKind::Edges).expect("condition is on digraphs");
        let vertices = source.size_param(SizeParamKind::Vertices).expect("condition is on digraphs");
        edges >= vertices
    } else {
        true
    };
    if bound_applies {
        if !decl.bound.holds(m1, m2) {
            report.bound_violations += 1;
        }
        ratios.observe(m2, decl.bound.limit(m1));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn limits_and_holds() {
        let b = SizeBound { k: 4, exponent: 1 };
        assert_eq!(b.limit(10), 44);
        assert!(b.holds(10, 44));
        assert!(!b.holds(10, 45));
        let sq = SizeBound { k: 3, exponent: 2 };
        assert_eq!(sq.limit(5), 78);
    }

    #[test]
    fn linear_composition_is_sharp() {
        let a = SizeBound { k: 4, exponent: 1 };
        let b = SizeBound { k: 5, exponent: 1 };
        let c = compose_bounds(a, b);
        assert_eq!((c.k, c.exponent), (25, 1));
        // Worst case through the pipeline stays below the composed limit.
        let m1 = 7u64;
        let m2 = a.limit(m1);
        assert!(c.holds(m1, b.limit(m2)));
    }

    #[test]
    fn general_composition_dominates_the_pipeline() {
        let a = SizeBound { k: 2, exponent: 2 };
        let b = SizeBound { k: 3, exponent: 2 };
        let c = compose_bounds(a, b);
        assert_eq!((c.k, c.exponent), (48, 4));
        for m1 in 1..20u64 {
            let m2 = a.limit(m1);
            assert!(c.holds(m1, b.limit(m2)), "m1 = {m1}");
        }
    }
}
