//! C interface to the sublin library: instance parsing, decision and
//! optimization solvers, catalog reductions, space metering, and reduction
//! verification, all behind opaque handles.
//!
//! Conventions shared by every function:
//!
//! - Every fallible call returns a [`SublinStatus`]. Out-parameters are
//!   written only when the call returns [`SublinStatus::Ok`].
//! - Strings passed in are NUL-terminated UTF-8. Strings passed out are
//!   allocated here and released with [`sublin_string_free`]; instances are
//!   released with [`sublin_instance_free`]. Null pointers are rejected with
//!   [`SublinStatus::NullArgument`], never dereferenced.
//! - Panics do not unwind across the boundary; they surface as
//!   [`SublinStatus::Internal`].

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use sublin::instances::{Family, InstanceData, ParamInstance};
use sublin::reductions::{catalog, catalog_entry, run_verification, QUERY_REDUCTION_NAME};
use sublin::report::VerifyRun;
use sublin::solvers::{
    reach_decide, search_1nfa, search_uock, solve_2sat, solve_lp, solve_maxhpp,
};
use sublin::spacebound::{
    measure_reach, measure_twosat, Answer, SpaceReport, Strategy, DEFAULT_STEP_BUDGET,
};

/// Result of one call. Zero is success; everything else names the first
/// check that failed.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SublinStatus {
    /// The call succeeded and every out-parameter is set.
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// Both batch sizes of a verification were absent, or an argument was
    /// outside its documented range.
    InvalidArgument = 3,
    /// No problem family, reduction, or strategy goes by the given name.
    UnknownName = 4,
    /// The instance text does not parse in the family's format.
    ParseError = 5,
    /// The instance parses but violates a structural invariant, or it lies
    /// outside the occurrence/degree/column cap a reduction requires.
    InvalidInstance = 6,
    /// The operation is not defined for the instance's problem family.
    WrongFamily = 7,
    /// A unique-cover instance broke the promise its solver relies on.
    BrokenPromise = 8,
    /// An internal invariant failed; the out-parameters are untouched.
    Internal = 9,
}

/// Parsed, validated instance of one of the six problem families.
pub struct SublinInstance {
    inner: ParamInstance,
}

const VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), "\0");

fn guarded(body: impl FnOnce() -> SublinStatus) -> SublinStatus {
    catch_unwind(AssertUnwindSafe(body)).unwrap_or(SublinStatus::Internal)
}

unsafe fn required_str<'a>(text: *const c_char) -> Result<&'a str, SublinStatus> {
    if text.is_null() {
        return Err(SublinStatus::NullArgument);
    }
    CStr::from_ptr(text).to_str().map_err(|_| SublinStatus::InvalidUtf8)
}

unsafe fn required_instance<'a>(
    instance: *const SublinInstance,
) -> Result<&'a ParamInstance, SublinStatus> {
    instance.as_ref().map(|handle| &handle.inner).ok_or(SublinStatus::NullArgument)
}

unsafe fn export_string(text: String, out: *mut *mut c_char) -> SublinStatus {
    match CString::new(text) {
        Ok(owned) => {
            *out = owned.into_raw();
            SublinStatus::Ok
        }
        Err(_) => SublinStatus::Internal,
    }
}

unsafe fn export_instance(inner: ParamInstance, out: *mut *mut SublinInstance) -> SublinStatus {
    *out = Box::into_raw(Box::new(SublinInstance { inner }));
    SublinStatus::Ok
}

/// Accepts both the solver-facing problem names and the file-format tags.
fn family_named(name: &str) -> Option<Family> {
    match name {
        "2sat" => Some(Family::Cnf),
        "reach" => Some(Family::Digraph),
        "1nfa" => Some(Family::Nfa),
        "maxhpp" => Some(Family::Hpp),
        other => Family::from_tag(other),
    }
}

/// Library version as a static NUL-terminated string; do not free it.
#[no_mangle]
pub extern "C" fn sublin_version() -> *const c_char {
    VERSION.as_ptr().cast()
}

/// Parses `text` as an instance of `family` and hands back an owned handle.
///
/// `family` is one of `2sat`, `reach`, `lp`, `1nfa`, `uock`, `maxhpp` (the
/// format tags `cnf`, `dstcon`, `nfa`, `hpp` are accepted too). The instance
/// must parse and pass structural validation.
///
/// # Safety
///
/// `family` and `text` must be NUL-terminated strings valid for the duration
/// of the call; `out` must point to writable memory for one pointer.
#[no_mangle]
pub unsafe extern "C" fn sublin_instance_parse(
    family: *const c_char,
    text: *const c_char,
    out: *mut *mut SublinInstance,
) -> SublinStatus {
    if out.is_null() {
        return SublinStatus::NullArgument;
    }
    let (family, text) = match (required_str(family), required_str(text)) {
        (Ok(f), Ok(t)) => (f, t),
        (Err(status), _) | (_, Err(status)) => return status,
    };
    let Some(family) = family_named(family) else {
        return SublinStatus::UnknownName;
    };
    guarded(|| match ParamInstance::parse(family, text) {
        Ok(instance) if instance.validate().is_empty() => export_instance(instance, out),
        Ok(_) => SublinStatus::InvalidInstance,
        Err(_) => SublinStatus::ParseError,
    })
}

/// Writes the instance's canonical text encoding.
///
/// # Safety
///
/// `instance` must be a live handle from this library; `out` must point to
/// writable memory for one pointer. Free the result with
/// [`sublin_string_free`].
#[no_mangle]
pub unsafe extern "C" fn sublin_instance_serialize(
    instance: *const SublinInstance,
    out: *mut *mut c_char,
) -> SublinStatus {
    if out.is_null() {
        return SublinStatus::NullArgument;
    }
    match required_instance(instance) {
        Ok(inner) => guarded(|| export_string(inner.serialize(), out)),
        Err(status) => status,
    }
}

/// Writes the instance's family tag (`cnf`, `dstcon`, `lp`, `nfa`, `uock`,
/// or `hpp`).
///
/// # Safety
///
/// `instance` must be a live handle from this library; `out` must point to
/// writable memory for one pointer. Free the result with
/// [`sublin_string_free`].
#[no_mangle]
pub unsafe extern "C" fn sublin_instance_family(
    instance: *const SublinInstance,
    out: *mut *mut c_char,
) -> SublinStatus {
    if out.is_null() {
        return SublinStatus::NullArgument;
    }
    match required_instance(instance) {
        Ok(inner) => guarded(|| export_string(inner.family().tag().to_string(), out)),
        Err(status) => status,
    }
}

/// Writes the instance's declared size parameter (variables, vertices,
/// columns, the state-alphabet-length product, element count, or dimension,
/// by family).
///
/// # Safety
///
/// `instance` must be a live handle from this library; `out` must point to
/// writable memory for one `uint64_t`.
#[no_mangle]
pub unsafe extern "C" fn sublin_instance_size(
    instance: *const SublinInstance,
    out: *mut u64,
) -> SublinStatus {
    if out.is_null() {
        return SublinStatus::NullArgument;
    }
    match required_instance(instance) {
        Ok(inner) => guarded(|| {
            *out = inner.declared_size();
            SublinStatus::Ok
        }),
        Err(status) => status,
    }
}

/// Releases a handle from this library. Null is a no-op.
///
/// # Safety
///
/// `instance` must be null or a handle not freed before; the handle is dead
/// afterwards.
#[no_mangle]
pub unsafe extern "C" fn sublin_instance_free(instance: *mut SublinInstance) {
    if !instance.is_null() {
        drop(Box::from_raw(instance));
    }
}

/// Releases a string returned by this library. Null is a no-op.
///
/// # Safety
///
/// `text` must be null or a string returned by this library and not freed
/// before; the pointer is dead afterwards.
#[no_mangle]
pub unsafe extern "C" fn sublin_string_free(text: *mut c_char) {
    if !text.is_null() {
        drop(CString::from_raw(text));
    }
}

/// Decides the instance and writes 1 (yes) or 0 (no).
///
/// Satisfiability for `2sat` and `lp`, s-t reachability for `reach`,
/// accepted-word existence for `1nfa`, cover existence for `uock`. Hop
/// sequence instances are optimization problems; use
/// [`sublin_maxhpp_value`] instead.
///
/// # Safety
///
/// `instance` must be a live handle from this library; `out_yes` must point
/// to writable memory for one `int32_t`.
#[no_mangle]
pub unsafe extern "C" fn sublin_decide(
    instance: *const SublinInstance,
    out_yes: *mut i32,
) -> SublinStatus {
    if out_yes.is_null() {
        return SublinStatus::NullArgument;
    }
    let inner = match required_instance(instance) {
        Ok(inner) => inner,
        Err(status) => return status,
    };
    guarded(|| {
        let yes = match &inner.data {
            InstanceData::Cnf(formula) => solve_2sat(formula).is_satisfiable(),
            InstanceData::Digraph(graph) => reach_decide(graph),
            InstanceData::Lp(system) => solve_lp(system).is_satisfiable(),
            InstanceData::Nfa(spec) => search_1nfa(spec).is_some(),
            InstanceData::Uock(cover) => match search_uock(cover) {
                Ok(pieces) => pieces.is_some(),
                Err(_) => return SublinStatus::BrokenPromise,
            },
            InstanceData::Hpp(_) => return SublinStatus::WrongFamily,
        };
        *out_yes = yes as i32;
        SublinStatus::Ok
    })
}

/// Writes the maximal hop sequence value of a `maxhpp` instance.
///
/// # Safety
///
/// `instance` must be a live handle from this library; `out_value` must
/// point to writable memory for one `uint64_t`.
#[no_mangle]
pub unsafe extern "C" fn sublin_maxhpp_value(
    instance: *const SublinInstance,
    out_value: *mut u64,
) -> SublinStatus {
    if out_value.is_null() {
        return SublinStatus::NullArgument;
    }
    let inner = match required_instance(instance) {
        Ok(inner) => inner,
        Err(status) => return status,
    };
    guarded(|| match &inner.data {
        InstanceData::Hpp(instance) => {
            *out_value = solve_maxhpp(instance).value;
            SublinStatus::Ok
        }
        _ => SublinStatus::WrongFamily,
    })
}

/// Applies the named catalog reduction to `source` and hands back an owned
/// target handle.
///
/// The source must be in the reduction's family and satisfy its declared
/// occurrence/degree/column cap, if any. The query-based translation is not
/// available here because it produces many instances per source.
///
/// # Safety
///
/// `name` must be a NUL-terminated string; `source` must be a live handle
/// from this library; `out` must point to writable memory for one pointer.
#[no_mangle]
pub unsafe extern "C" fn sublin_reduce(
    name: *const c_char,
    source: *const SublinInstance,
    out: *mut *mut SublinInstance,
) -> SublinStatus {
    if out.is_null() {
        return SublinStatus::NullArgument;
    }
    let (name, inner) = match (required_str(name), required_instance(source)) {
        (Ok(n), Ok(i)) => (n, i),
        (Err(status), _) | (_, Err(status)) => return status,
    };
    let Some(entry) = catalog_entry(name) else {
        return SublinStatus::UnknownName;
    };
    if inner.family() != entry.decl.source {
        return SublinStatus::WrongFamily;
    }
    guarded(|| {
        if let Some(cap) = entry.decl.source_cap {
            if !inner.validate_capped(cap).is_empty() {
                return SublinStatus::InvalidInstance;
            }
        }
        export_instance(entry.apply(inner), out)
    })
}

/// Runs a space-metered decision on a `2sat` or `reach` instance.
///
/// `strategy` is `bfs`, `savitch`, or `hybrid:<len>` with a positive segment
/// length. A `step_budget` of 0 selects the built-in default of 100,000,000
/// steps. Writes the peak working storage in bits, the step count, and the
/// answer: 1 (yes), 0 (no), or -1 (budget exhausted before an answer).
///
/// # Safety
///
/// `instance` must be a live handle from this library; `strategy` must be a
/// NUL-terminated string; the three out-pointers must each point to writable
/// memory for their type.
#[no_mangle]
pub unsafe extern "C" fn sublin_measure(
    instance: *const SublinInstance,
    strategy: *const c_char,
    step_budget: u64,
    out_peak_bits: *mut u64,
    out_steps: *mut u64,
    out_answer: *mut i32,
) -> SublinStatus {
    if out_peak_bits.is_null() || out_steps.is_null() || out_answer.is_null() {
        return SublinStatus::NullArgument;
    }
    let (strategy, inner) = match (required_str(strategy), required_instance(instance)) {
        (Ok(s), Ok(i)) => (s, i),
        (Err(status), _) | (_, Err(status)) => return status,
    };
    let Ok(strategy) = strategy.parse::<Strategy>() else {
        return SublinStatus::UnknownName;
    };
    let budget = if step_budget == 0 { DEFAULT_STEP_BUDGET } else { step_budget };
    guarded(|| {
        let report: SpaceReport = match &inner.data {
            InstanceData::Cnf(formula) => measure_twosat(formula, strategy, budget),
            InstanceData::Digraph(graph) => measure_reach(graph, strategy, budget),
            _ => return SublinStatus::WrongFamily,
        };
        *out_peak_bits = report.peak_bits;
        *out_steps = report.steps;
        *out_answer = match report.answer {
            Answer::Yes => 1,
            Answer::No => 0,
            Answer::Exhausted => -1,
        };
        SublinStatus::Ok
    })
}

/// Replays reductions against their answer oracles and size bounds.
///
/// `name` is one catalog reduction, the query translation, or `all` for the
/// whole catalog. A non-negative `exhaustive_size` adds the full source
/// domain up to that size; a positive `random_count` adds that many sampled
/// sources seeded deterministically from `seed`. At least one of the two
/// batches must be requested. Writes a JSON run report and its verdict as 1
/// (all reductions passed) or 0.
///
/// # Safety
///
/// `name` must be a NUL-terminated string; `out_json` and `out_all_passed`
/// must point to writable memory for one pointer and one `int32_t`. Free the
/// JSON with [`sublin_string_free`].
#[no_mangle]
pub unsafe extern "C" fn sublin_verify(
    name: *const c_char,
    exhaustive_size: i32,
    random_count: u64,
    seed: u64,
    out_json: *mut *mut c_char,
    out_all_passed: *mut i32,
) -> SublinStatus {
    if out_json.is_null() || out_all_passed.is_null() {
        return SublinStatus::NullArgument;
    }
    let name = match required_str(name) {
        Ok(name) => name,
        Err(status) => return status,
    };
    let exhaustive = u32::try_from(exhaustive_size).ok();
    let random = (random_count > 0).then_some(random_count);
    if exhaustive.is_none() && random.is_none() {
        return SublinStatus::InvalidArgument;
    }
    guarded(|| {
        let Some(reports) = run_verification(name, exhaustive, random, seed, false) else {
            return SublinStatus::UnknownName;
        };
        let all_passed = reports.iter().all(|report| report.passed());
        let run = VerifyRun { exhaustive, random, seed, reports, all_passed };
        let json = match serde_json::to_string_pretty(&run) {
            Ok(json) => json,
            Err(_) => return SublinStatus::Internal,
        };
        let status = export_string(json, out_json);
        if status == SublinStatus::Ok {
            *out_all_passed = all_passed as i32;
        }
        status
    })
}

/// Writes a JSON array with every reduction name accepted by
/// [`sublin_reduce`] and [`sublin_verify`], the query translation last.
///
/// # Safety
///
/// `out` must point to writable memory for one pointer. Free the result with
/// [`sublin_string_free`].
#[no_mangle]
pub unsafe extern "C" fn sublin_reduction_names(out: *mut *mut c_char) -> SublinStatus {
    if out.is_null() {
        return SublinStatus::NullArgument;
    }
    guarded(|| {
        let mut names: Vec<&str> = catalog().iter().map(|entry| entry.decl.name).collect();
        names.push(QUERY_REDUCTION_NAME);
        match serde_json::to_string(&names) {
            Ok(json) => export_string(json, out),
            Err(_) => SublinStatus::Internal,
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ptr;
    use sublin::instances::{gen_random, GenSpec};

    fn c(text: &str) -> CString {
        CString::new(text).unwrap()
    }

    unsafe fn parse(family: &str, text: &str) -> *mut SublinInstance {
        let mut handle = ptr::null_mut();
        let status = sublin_instance_parse(c(family).as_ptr(), c(text).as_ptr(), &mut handle);
        assert_eq!(status, SublinStatus::Ok);
        handle
    }

    unsafe fn take_string(text: *mut c_char) -> String {
        let owned = CStr::from_ptr(text).to_str().unwrap().to_string();
        sublin_string_free(text);
        owned
    }

    #[test]
    fn round_trips_an_instance_through_the_handle() {
        unsafe {
            let text = "p cnf 2 2\n1 -2 0\n2 0\n";
            let handle = parse("2sat", text);

            let mut family = ptr::null_mut();
            assert_eq!(sublin_instance_family(handle, &mut family), SublinStatus::Ok);
            assert_eq!(take_string(family), "cnf");

            let mut size = 0u64;
            assert_eq!(sublin_instance_size(handle, &mut size), SublinStatus::Ok);
            let expected = ParamInstance::parse(Family::Cnf, text).unwrap().declared_size();
            assert_eq!(size, expected);

            let mut serialized = ptr::null_mut();
            assert_eq!(sublin_instance_serialize(handle, &mut serialized), SublinStatus::Ok);
            assert_eq!(take_string(serialized), text);

            sublin_instance_free(handle);
        }
    }

    #[test]
    fn rejects_bad_arguments_with_the_matching_status() {
        unsafe {
            let mut handle = ptr::null_mut();
            let text = c("p cnf 1 1\n1 0\n");

            let status = sublin_instance_parse(ptr::null(), text.as_ptr(), &mut handle);
            assert_eq!(status, SublinStatus::NullArgument);

            let status =
                sublin_instance_parse(c("2sat").as_ptr(), text.as_ptr(), ptr::null_mut());
            assert_eq!(status, SublinStatus::NullArgument);

            let status = sublin_instance_parse(c("3sat").as_ptr(), text.as_ptr(), &mut handle);
            assert_eq!(status, SublinStatus::UnknownName);

            let status =
                sublin_instance_parse(c("2sat").as_ptr(), c("p cnf x\n").as_ptr(), &mut handle);
            assert_eq!(status, SublinStatus::ParseError);

            let not_utf8 = [0xffu8 as c_char, 0];
            let status =
                sublin_instance_parse(c("2sat").as_ptr(), not_utf8.as_ptr(), &mut handle);
            assert_eq!(status, SublinStatus::InvalidUtf8);

            let mut yes = 0;
            assert_eq!(sublin_decide(ptr::null(), &mut yes), SublinStatus::NullArgument);
        }
    }

    #[test]
    fn validation_failures_do_not_produce_handles() {
        unsafe {
            let mut handle = ptr::null_mut();
            let repeated_piece = "0101\n1\n01\n";
            let status = sublin_instance_parse(
                c("uock").as_ptr(),
                c(repeated_piece).as_ptr(),
                &mut handle,
            );
            assert_eq!(status, SublinStatus::InvalidInstance);
            assert!(handle.is_null());
        }
    }

    #[test]
    fn decides_through_the_boundary() {
        unsafe {
            let sat = parse("2sat", "p cnf 1 1\n1 0\n");
            let unsat = parse("2sat", "p cnf 1 2\n1 0\n-1 0\n");
            let mut yes = -1;
            assert_eq!(sublin_decide(sat, &mut yes), SublinStatus::Ok);
            assert_eq!(yes, 1);
            assert_eq!(sublin_decide(unsat, &mut yes), SublinStatus::Ok);
            assert_eq!(yes, 0);
            sublin_instance_free(sat);
            sublin_instance_free(unsat);

            let graph = parse("reach", "p dstcon 3 2 1 3\ne 1 2\ne 2 3\n");
            assert_eq!(sublin_decide(graph, &mut yes), SublinStatus::Ok);
            assert_eq!(yes, 1);
            sublin_instance_free(graph);
        }
    }

    #[test]
    fn optimization_value_matches_the_solver() {
        unsafe {
            let spec = GenSpec::Hpp { dim: 3, length_d: 3 };
            let instance = gen_random(&spec, 7).unwrap();
            let expected = match &instance.data {
                InstanceData::Hpp(hpp) => solve_maxhpp(hpp).value,
                _ => unreachable!("hpp spec generates hop instances"),
            };

            let handle = parse("maxhpp", &instance.serialize());
            let mut value = 0u64;
            assert_eq!(sublin_maxhpp_value(handle, &mut value), SublinStatus::Ok);
            assert_eq!(value, expected);

            let mut yes = 0;
            assert_eq!(sublin_decide(handle, &mut yes), SublinStatus::WrongFamily);
            sublin_instance_free(handle);

            let cnf = parse("2sat", "p cnf 1 1\n1 0\n");
            assert_eq!(sublin_maxhpp_value(cnf, &mut value), SublinStatus::WrongFamily);
            sublin_instance_free(cnf);
        }
    }

    #[test]
    fn reduces_and_solves_the_target() {
        unsafe {
            let graph = parse("reach", "p dstcon 3 2 1 3\ne 1 2\ne 2 3\n");

            let mut target = ptr::null_mut();
            assert_eq!(
                sublin_reduce(c("to-maxhpp").as_ptr(), graph, &mut target),
                SublinStatus::Ok
            );
            let mut family = ptr::null_mut();
            assert_eq!(sublin_instance_family(target, &mut family), SublinStatus::Ok);
            assert_eq!(take_string(family), "hpp");
            let mut value = 0u64;
            assert_eq!(sublin_maxhpp_value(target, &mut value), SublinStatus::Ok);
            assert_eq!(value, sublin::reductions::maxhpp_yes_value(3));
            sublin_instance_free(target);

            let mut bogus = ptr::null_mut();
            assert_eq!(
                sublin_reduce(c("no-such").as_ptr(), graph, &mut bogus),
                SublinStatus::UnknownName
            );
            assert_eq!(
                sublin_reduce(c("split3").as_ptr(), graph, &mut bogus),
                SublinStatus::WrongFamily
            );
            sublin_instance_free(graph);

            let fan_out = parse("reach", "p dstcon 5 4 1 5\ne 1 2\ne 1 3\ne 1 4\ne 1 5\n");
            assert_eq!(
                sublin_reduce(c("to-uock").as_ptr(), fan_out, &mut bogus),
                SublinStatus::InvalidInstance
            );
            sublin_instance_free(fan_out);
        }
    }

    #[test]
    fn metering_honors_the_budget() {
        unsafe {
            let graph = parse("reach", "p dstcon 3 2 1 3\ne 1 2\ne 2 3\n");
            let mut peak = 0u64;
            let mut steps = 0u64;
            let mut answer = 0;

            let status =
                sublin_measure(graph, c("bfs").as_ptr(), 0, &mut peak, &mut steps, &mut answer);
            assert_eq!(status, SublinStatus::Ok);
            assert_eq!(answer, 1);
            assert!(peak > 0 && steps > 0);

            let status =
                sublin_measure(graph, c("savitch").as_ptr(), 2, &mut peak, &mut steps, &mut answer);
            assert_eq!(status, SublinStatus::Ok);
            assert_eq!(answer, -1);

            let status =
                sublin_measure(graph, c("dfs").as_ptr(), 0, &mut peak, &mut steps, &mut answer);
            assert_eq!(status, SublinStatus::UnknownName);
            sublin_instance_free(graph);

            let lp = parse("lp", "p lp 1 1\nr 1:1/1 >= 0/1\n");
            let status =
                sublin_measure(lp, c("bfs").as_ptr(), 0, &mut peak, &mut steps, &mut answer);
            assert_eq!(status, SublinStatus::WrongFamily);
            sublin_instance_free(lp);
        }
    }

    #[test]
    fn verification_reports_match_the_library_driver() {
        unsafe {
            let mut json = ptr::null_mut();
            let mut passed = 0;
            let status =
                sublin_verify(c("split3").as_ptr(), -1, 5, 1, &mut json, &mut passed);
            assert_eq!(status, SublinStatus::Ok);
            assert_eq!(passed, 1);

            let reports = run_verification("split3", None, Some(5), 1, false).unwrap();
            let run = VerifyRun {
                exhaustive: None,
                random: Some(5),
                seed: 1,
                reports,
                all_passed: true,
            };
            assert_eq!(take_string(json), serde_json::to_string_pretty(&run).unwrap());

            let status = sublin_verify(c("split3").as_ptr(), -1, 0, 1, &mut json, &mut passed);
            assert_eq!(status, SublinStatus::InvalidArgument);
            let status = sublin_verify(c("nope").as_ptr(), -1, 5, 1, &mut json, &mut passed);
            assert_eq!(status, SublinStatus::UnknownName);
        }
    }

    #[test]
    fn name_listing_covers_the_catalog_and_the_query_translation() {
        unsafe {
            let mut json = ptr::null_mut();
            assert_eq!(sublin_reduction_names(&mut json), SublinStatus::Ok);
            let names: Vec<String> = serde_json::from_str(&take_string(json)).unwrap();
            assert_eq!(names.len(), catalog().len() + 1);
            assert!(names.iter().any(|name| name == "split3"));
            assert_eq!(names.last().unwrap(), QUERY_REDUCTION_NAME);
        }
    }

    #[test]
    fn frees_tolerate_null() {
        unsafe {
            sublin_instance_free(ptr::null_mut());
            sublin_string_free(ptr::null_mut());
        }
        assert!(!sublin_version().is_null());
    }

    #[test]
    fn generated_header_declares_the_api() {
        let header = concat!(env!("CARGO_MANIFEST_DIR"), "/include/sublin.h");
        let text = std::fs::read_to_string(header).unwrap();
        assert!(text.contains("SUBLIN_H"));
        for symbol in [
            "sublin_version",
            "sublin_instance_parse",
            "sublin_instance_serialize",
            "sublin_instance_family",
            "sublin_instance_size",
            "sublin_instance_free",
            "sublin_string_free",
            "sublin_decide",
            "sublin_maxhpp_value",
            "sublin_reduce",
            "sublin_measure",
            "sublin_verify",
            "sublin_reduction_names",
        ] {
            assert!(text.contains(symbol), "header lacks {symbol}");
        }
        assert!(text.contains("SUBLIN_STATUS_OK"), "status constants are not C-style");
    }
}
