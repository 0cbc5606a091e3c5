//! The reduction catalog: every translation bundled with its declared
//! contract, brute-force answer oracles for both ends, and a canonical
//! random-source sampler, so that one verifier can replay any of them.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::instances::{
    gen_random, Cnf2Formula, Digraph, Family, GenSpec, HppInstance, InstanceData, LpSystem,
    NfaSpec, ParamInstance, SizeParamKind, UockInstance,
};
use crate::solvers::{reach_decide, search_1nfa, search_uock, solve_2sat, solve_lp, solve_maxhpp};

use super::decl::{check_sizes_and_shape, RatioTracker, ReductionDecl, SizeBound, VerifyReport};
use super::exhaustive::{exhaustive_formulas, exhaustive_sources, EXHAUSTIVE_CLAUSE_LIMIT};
use super::graph::{degree_reduce, layered_square};
use super::linear::{lp_to_2sat3, twosat3_to_lp};
use super::search::{dstcon_to_1nfa, dstcon_to_maxhpp, dstcon_to_uock, maxhpp_yes_value};
use super::twosat::{
    combine_query_answers, reach_to_2sat3, split_occurrences, twosat3_to_reach_queries,
};

/// Name under which the query-based satisfiability decision is verified; it
/// is not a catalog entry because it asks many reachability questions per
/// formula instead of producing one instance.
pub const QUERY_REDUCTION_NAME: &str = "2sat3-to-reach";

/// A translation with everything needed to check it empirically.
#[derive(Clone)]
pub struct CatalogEntry {
    pub decl: ReductionDecl,
    apply: fn(&ParamInstance) -> ParamInstance,
    source_oracle: fn(&ParamInstance) -> bool,
    target_oracle: fn(&ParamInstance) -> bool,
    sampler: fn(&mut ChaCha8Rng) -> ParamInstance,
}

impl CatalogEntry {
    pub fn apply(&self, source: &ParamInstance) -> ParamInstance {
        (self.apply)(source)
    }

    pub fn source_answer(&self, source: &ParamInstance) -> bool {
        (self.source_oracle)(source)
    }

    pub fn target_answer(&self, target: &ParamInstance) -> bool {
        (self.target_oracle)(target)
    }

    /// Draws a random instance from the entry's declared source domain.
    pub fn sample_source(&self, rng: &mut ChaCha8Rng) -> ParamInstance {
        (self.sampler)(rng)
    }
}

fn as_cnf(inst: &ParamInstance) -> &Cnf2Formula {
    match &inst.data {
        InstanceData::Cnf(f) => f,
        _ => panic!("expected a cnf instance, got {}", inst.family()),
    }
}

fn as_digraph(inst: &ParamInstance) -> &Digraph {
    match &inst.data {
        InstanceData::Digraph(g) => g,
        _ => panic!("expected a dstcon instance, got {}", inst.family()),
    }
}

fn as_lp(inst: &ParamInstance) -> &LpSystem {
    match &inst.data {
        InstanceData::Lp(lp) => lp,
        _ => panic!("expected an lp instance, got {}", inst.family()),
    }
}

fn as_nfa(inst: &ParamInstance) -> &NfaSpec {
    match &inst.data {
        InstanceData::Nfa(m) => m,
        _ => panic!("expected an nfa instance, got {}", inst.family()),
    }
}

fn as_uock(inst: &ParamInstance) -> &UockInstance {
    match &inst.data {
        InstanceData::Uock(u) => u,
        _ => panic!("expected a uock instance, got {}", inst.family()),
    }
}

fn as_hpp(inst: &ParamInstance) -> &HppInstance {
    match &inst.data {
        InstanceData::Hpp(h) => h,
        _ => panic!("expected an hpp instance, got {}", inst.family()),
    }
}

fn cnf_satisfiable(inst: &ParamInstance) -> bool {
    solve_2sat(as_cnf(inst)).is_satisfiable()
}

fn digraph_reachable(inst: &ParamInstance) -> bool {
    reach_decide(as_digraph(inst))
}

fn lp_satisfiable(inst: &ParamInstance) -> bool {
    solve_lp(as_lp(inst)).is_satisfiable()
}

fn nfa_has_word(inst: &ParamInstance) -> bool {
    search_1nfa(as_nfa(inst)).is_some()
}

fn uock_has_cover(inst: &ParamInstance) -> bool {
    search_uock(as_uock(inst)).expect("constructed instances keep the promise").is_some()
}

fn hpp_hits_yes_value(inst: &ParamInstance) -> bool {
    let h = as_hpp(inst);
    let n = (1..=h.dim).find(|i| i * i == h.dim).expect("dimension is a perfect square");
    solve_maxhpp(h).value == maxhpp_yes_value(n)
}

fn apply_split(inst: &ParamInstance) -> ParamInstance {
    ParamInstance::new(InstanceData::Cnf(split_occurrences(as_cnf(inst))))
}

fn apply_reach_to_2sat3(inst: &ParamInstance) -> ParamInstance {
    ParamInstance::new(InstanceData::Cnf(reach_to_2sat3(as_digraph(inst))))
}

fn apply_twosat3_to_lp(inst: &ParamInstance) -> ParamInstance {
    ParamInstance::new(InstanceData::Lp(twosat3_to_lp(as_cnf(inst))))
}

fn apply_lp_to_2sat3(inst: &ParamInstance) -> ParamInstance {
    ParamInstance::new(InstanceData::Cnf(lp_to_2sat3(as_lp(inst))))
}

fn apply_degree_reduce(inst: &ParamInstance) -> ParamInstance {
    ParamInstance::new(InstanceData::Digraph(degree_reduce(as_digraph(inst))))
}

fn apply_layered_square(inst: &ParamInstance) -> ParamInstance {
    ParamInstance::new(InstanceData::Digraph(layered_square(as_digraph(inst))))
}

fn apply_to_1nfa(inst: &ParamInstance) -> ParamInstance {
    let nfa = dstcon_to_1nfa(as_digraph(inst))
        .expect("degree-capped sources keep out-degrees within the alphabet");
    ParamInstance::new(InstanceData::Nfa(nfa))
}

fn apply_to_uock(inst: &ParamInstance) -> ParamInstance {
    ParamInstance::new(InstanceData::Uock(dstcon_to_uock(as_digraph(inst))))
}

fn apply_to_maxhpp(inst: &ParamInstance) -> ParamInstance {
    ParamInstance::new(InstanceData::Hpp(dstcon_to_maxhpp(as_digraph(inst))))
}

fn sample(rng: &mut ChaCha8Rng, spec: impl Fn(&mut ChaCha8Rng) -> GenSpec) -> ParamInstance {
    loop {
        let drawn = spec(rng);
        if let Ok(inst) = gen_random(&drawn, rng.random()) {
            return inst;
        }
    }
}

fn sample_cnf(rng: &mut ChaCha8Rng) -> ParamInstance {
    sample(rng, |rng| GenSpec::Cnf {
        num_vars: rng.random_range(1..=8),
        num_clauses: rng.random_range(0..=12),
        occurrence_cap: None,
    })
}

fn sample_cnf3(rng: &mut ChaCha8Rng) -> ParamInstance {
    sample(rng, |rng| {
        let num_vars = rng.random_range(2..=8);
        GenSpec::Cnf {
            num_vars,
            num_clauses: rng.random_range(0..=(3 * num_vars).min(12)),
            occurrence_cap: Some(3),
        }
    })
}

fn sample_digraph3(rng: &mut ChaCha8Rng) -> ParamInstance {
    sample(rng, |rng| {
        let num_vertices = rng.random_range(1..=8);
        let most = (3 * num_vertices / 2).min(num_vertices * num_vertices).min(10);
        GenSpec::Digraph {
            num_vertices,
            num_edges: rng.random_range(0..=most),
            degree_cap: Some(3),
        }
    })
}

fn sample_digraph(rng: &mut ChaCha8Rng) -> ParamInstance {
    sample(rng, |rng| {
        let num_vertices = rng.random_range(1..=6);
        GenSpec::Digraph {
            num_vertices,
            num_edges: rng.random_range(0..=(num_vertices * num_vertices).min(12)),
            degree_cap: None,
        }
    })
}

fn sample_lp3(rng: &mut ChaCha8Rng) -> ParamInstance {
    sample(rng, |rng| GenSpec::Lp {
        num_rows: rng.random_range(0..=8),
        num_cols: rng.random_range(1..=5),
        column_cap: Some(3),
    })
}

/// All nine one-instance translations. Names double as command-line keys.
pub fn catalog() -> Vec<CatalogEntry> {
    vec![
        CatalogEntry {
            decl: ReductionDecl {
                name: "split3",
                source: Family::Cnf,
                target: Family::Cnf,
                complement: false,
                source_param: SizeParamKind::Clauses,
                target_param: SizeParamKind::Clauses,
                bound: SizeBound { k: 4, exponent: 1 },
                bound_needs_edges_ge_vertices: false,
                source_cap: None,
                target_cap: Some(3),
            },
            apply: apply_split,
            source_oracle: cnf_satisfiable,
            target_oracle: cnf_satisfiable,
            sampler: sample_cnf,
        },
        CatalogEntry {
            decl: ReductionDecl {
                name: "reach-to-2sat3",
                source: Family::Digraph,
                target: Family::Cnf,
                complement: true,
                source_param: SizeParamKind::Vertices,
                target_param: SizeParamKind::Clauses,
                bound: SizeBound { k: 5, exponent: 1 },
                bound_needs_edges_ge_vertices: false,
                source_cap: Some(3),
                target_cap: Some(3),
            },
            apply: apply_reach_to_2sat3,
            source_oracle: digraph_reachable,
            target_oracle: cnf_satisfiable,
            sampler: sample_digraph3,
        },
        CatalogEntry {
            decl: ReductionDecl {
                name: "2sat3-to-lp",
                source: Family::Cnf,
                target: Family::Lp,
                complement: false,
                source_param: SizeParamKind::Clauses,
                target_param: SizeParamKind::Rows,
                bound: SizeBound { k: 1, exponent: 1 },
                bound_needs_edges_ge_vertices: false,
                source_cap: Some(3),
                target_cap: Some(3),
            },
            apply: apply_twosat3_to_lp,
            source_oracle: cnf_satisfiable,
            target_oracle: lp_satisfiable,
            sampler: sample_cnf3,
        },
        CatalogEntry {
            decl: ReductionDecl {
                name: "lp-to-2sat3",
                source: Family::Lp,
                target: Family::Cnf,
                complement: false,
                source_param: SizeParamKind::Rows,
                target_param: SizeParamKind::Clauses,
                // Three clauses per row, times the occurrence-splitting factor
                // of 3, plus one: with the column cap at 3 this is 3 * 3 + 1.
                bound: SizeBound { k: 10, exponent: 1 },
                bound_needs_edges_ge_vertices: false,
                source_cap: Some(3),
                target_cap: Some(3),
            },
            apply: apply_lp_to_2sat3,
            source_oracle: lp_satisfiable,
            target_oracle: cnf_satisfiable,
            sampler: sample_lp3,
        },
        CatalogEntry {
            decl: ReductionDecl {
                name: "degree3",
                source: Family::Digraph,
                target: Family::Digraph,
                complement: false,
                source_param: SizeParamKind::Edges,
                target_param: SizeParamKind::Vertices,
                bound: SizeBound { k: 2, exponent: 1 },
                bound_needs_edges_ge_vertices: true,
                source_cap: None,
                target_cap: Some(3),
            },
            apply: apply_degree_reduce,
            source_oracle: digraph_reachable,
            target_oracle: digraph_reachable,
            sampler: sample_digraph,
        },
        CatalogEntry {
            decl: ReductionDecl {
                name: "layer",
                source: Family::Digraph,
                target: Family::Digraph,
                complement: false,
                source_param: SizeParamKind::Vertices,
                target_param: SizeParamKind::Vertices,
                bound: SizeBound { k: 1, exponent: 2 },
                bound_needs_edges_ge_vertices: false,
                source_cap: None,
                target_cap: None,
            },
            apply: apply_layered_square,
            source_oracle: digraph_reachable,
            target_oracle: digraph_reachable,
            sampler: sample_digraph,
        },
        CatalogEntry {
            decl: ReductionDecl {
                name: "to-1nfa",
                source: Family::Digraph,
                target: Family::Nfa,
                complement: false,
                source_param: SizeParamKind::Vertices,
                target_param: SizeParamKind::NfaProduct,
                bound: SizeBound { k: 4, exponent: 2 },
                bound_needs_edges_ge_vertices: false,
                source_cap: Some(3),
                target_cap: None,
            },
            apply: apply_to_1nfa,
            source_oracle: digraph_reachable,
            target_oracle: nfa_has_word,
            sampler: sample_digraph3,
        },
        CatalogEntry {
            decl: ReductionDecl {
                name: "to-uock",
                source: Family::Digraph,
                target: Family::Uock,
                complement: false,
                source_param: SizeParamKind::Vertices,
                target_param: SizeParamKind::Elements,
                bound: SizeBound { k: 3, exponent: 2 },
                bound_needs_edges_ge_vertices: false,
                source_cap: Some(3),
                target_cap: None,
            },
            apply: apply_to_uock,
            source_oracle: digraph_reachable,
            target_oracle: uock_has_cover,
            sampler: sample_digraph3,
        },
        CatalogEntry {
            decl: ReductionDecl {
                name: "to-maxhpp",
                source: Family::Digraph,
                target: Family::Hpp,
                complement: false,
                source_param: SizeParamKind::Vertices,
                target_param: SizeParamKind::Cols,
                bound: SizeBound { k: 1, exponent: 2 },
                bound_needs_edges_ge_vertices: false,
                source_cap: Some(3),
                target_cap: None,
            },
            apply: apply_to_maxhpp,
            source_oracle: digraph_reachable,
            target_oracle: hpp_hits_yes_value,
            sampler: sample_digraph3,
        },
    ]
}

pub fn catalog_entry(name: &str) -> Option<CatalogEntry> {
    catalog().into_iter().find(|e| e.decl.name == name)
}

/// Replays a reduction over `instances` (which must lie in the entry's source
/// domain) and tallies answer mismatches, size-bound violations, and invalid
/// targets.
pub fn verify_reduction(
    entry: &CatalogEntry,
    instances: impl IntoIterator<Item = ParamInstance>,
) -> VerifyReport {
    let mut report = VerifyReport::new(entry.decl.name);
    let mut ratios = RatioTracker::new();
    for source in instances {
        report.instances_checked += 1;
        let target = entry.apply(&source);
        let expected = entry.source_answer(&source) != entry.decl.complement;
        if entry.target_answer(&target) != expected {
            report.answer_mismatches += 1;
        }
        check_sizes_and_shape(&entry.decl, &source, &target, &mut report, &mut ratios);
    }
    report.max_bound_ratio = ratios.into_string();
    report
}

/// Replays the query-based decision: per formula, every query graph must be
/// valid and have exactly `2 * num_vars` vertices, and combining the
/// reachability answers must reproduce satisfiability.
pub fn verify_reach_queries(
    formulas: impl IntoIterator<Item = Cnf2Formula>,
) -> VerifyReport {
    verify_reach_queries_bounded(formulas, SizeBound { k: 2, exponent: 1 })
}

/// [`verify_reach_queries`] against a caller-chosen per-query size bound;
/// a deliberately wrong bound serves as a negative control.
pub fn verify_reach_queries_bounded(
    formulas: impl IntoIterator<Item = Cnf2Formula>,
    bound: SizeBound,
) -> VerifyReport {
    let mut report = VerifyReport::new(QUERY_REDUCTION_NAME);
    let mut ratios = RatioTracker::new();
    for formula in formulas {
        report.instances_checked += 1;
        let queries = twosat3_to_reach_queries(&formula);
        if queries.len() != 2 * formula.num_vars as usize {
            report.target_invalid += 1;
        }
        let answers: Vec<bool> = queries.iter().map(reach_decide).collect();
        if combine_query_answers(&answers) != solve_2sat(&formula).is_satisfiable() {
            report.answer_mismatches += 1;
        }
        for query in &queries {
            if !query.validate().is_empty() {
                report.target_invalid += 1;
            }
            if !bound.holds(formula.num_vars as u64, query.num_vertices as u64) {
                report.bound_violations += 1;
            }
            ratios.observe(query.num_vertices as u64, bound.limit(formula.num_vars as u64));
        }
    }
    report.max_bound_ratio = ratios.into_string();
    report
}

/// Random formulas from the query reduction's source domain.
pub fn sample_query_source(rng: &mut ChaCha8Rng) -> Cnf2Formula {
    as_cnf(&sample_cnf3(rng)).clone()
}

/// Runs the standard verification batches for `name`: a catalog entry, the
/// query translation [`QUERY_REDUCTION_NAME`], or `"all"` for the whole
/// catalog followed by the query translation. Returns `None` for an unknown
/// name, otherwise one report per verified reduction.
///
/// Each reduction sees the exhaustive source domain up to size `exhaustive`
/// (when given) plus `random` sampled instances (when given) drawn from a rng
/// seeded with `seed + index`, where `index` is the catalog position and the
/// query translation sits one past the end. Identical arguments therefore
/// reproduce identical reports. `sabotage_k` zeroes every declared constant
/// before checking, so a healthy run must report bound violations; it is the
/// negative control for the harness itself.
pub fn run_verification(
    name: &str,
    exhaustive: Option<u32>,
    random: Option<u64>,
    seed: u64,
    sabotage_k: bool,
) -> Option<Vec<VerifyReport>> {
    let entries = catalog();
    let query_index = entries.len();
    let selected: Vec<usize> = if name == "all" {
        (0..=query_index).collect()
    } else if name == QUERY_REDUCTION_NAME {
        vec![query_index]
    } else {
        vec![entries.iter().position(|e| e.decl.name == name)?]
    };
    let mut reports = Vec::new();
    for index in selected {
        if index == query_index {
            let mut formulas = Vec::new();
            if let Some(size) = exhaustive {
                for n in 0..=size {
                    formulas.extend(exhaustive_formulas(n, EXHAUSTIVE_CLAUSE_LIMIT, Some(3)));
                }
            }
            if let Some(count) = random {
                let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(index as u64));
                for _ in 0..count {
                    formulas.push(sample_query_source(&mut rng));
                }
            }
            let bound = if sabotage_k {
                SizeBound { k: 0, exponent: 1 }
            } else {
                SizeBound { k: 2, exponent: 1 }
            };
            reports.push(verify_reach_queries_bounded(formulas, bound));
        } else {
            let mut entry = entries[index].clone();
            if sabotage_k {
                entry.decl.bound = SizeBound { k: 0, exponent: entry.decl.bound.exponent };
            }
            let mut sources = Vec::new();
            if let Some(size) = exhaustive {
                sources.extend(exhaustive_sources(&entry.decl, size));
            }
            if let Some(count) = random {
                let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(index as u64));
                for _ in 0..count {
                    sources.push(entry.sample_source(&mut rng));
                }
            }
            reports.push(verify_reduction(&entry, sources));
        }
    }
    Some(reports)
}
