//! C ABI over the halin-packing library.
//!
//! Graphs travel as opaque handles; everything else crosses the boundary as
//! JSON strings in the library's interchange formats. Status codes mirror the
//! CLI exit codes: 0 ok/valid/Sat, 3 Unsat or invalid coloring, 4 Unknown,
//! 64 usage error, 65 invalid graph, 70 internal error.

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Duration;

use halin_packing::constructive::{color_1123, color_122222, lemma1_tree_coloring};
use halin_packing::error::Error;
use halin_packing::generators::{named_instance, random_cubic_halin, InstanceName, PlaneCubicTree};
use halin_packing::json::{coloring_from_json, coloring_to_json, halin_from_json, halin_to_json};
use halin_packing::solver::{decide, SearchConfig, SolveStatus};
use halin_packing::{all_pairs_distances, verify_packing, HalinGraph, SPacking};

/// Result codes returned by every fallible function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HpStatus {
    Ok = 0,
    /// Unsat outcome or invalid coloring.
    Unsat = 3,
    /// Search limits hit before resolution.
    Unknown = 4,
    /// Malformed arguments, JSON, or schedule.
    Usage = 64,
    /// Structurally invalid graph.
    BadGraph = 65,
    /// Unexpected internal failure.
    Internal = 70,
}

/// Opaque cubic Halin graph handle.
pub struct HpGraph {
    inner: HalinGraph,
}

fn classify(err: &Error) -> HpStatus {
    match err {
        Error::Json(_)
        | Error::BadSchedule(_)
        | Error::InvalidInput(_)
        | Error::UnknownName(_)
        | Error::InvalidSize(_)
        | Error::BoundTooLarge { .. }
        | Error::OracleTooLarge { .. }
        | Error::ScheduleTooLong(_, _) => HpStatus::Usage,
        Error::NotATree(_)
        | Error::BadDegree { .. }
        | Error::OrderTooSmall(_)
        | Error::CycleMismatch(_)
        | Error::NonPlanarOrder(_, _)
        | Error::Disconnected
        | Error::BadTree(_) => HpStatus::BadGraph,
        _ => HpStatus::Internal,
    }
}

/// # Safety
/// `ptr` must be null or point to a NUL-terminated string valid for the call.
unsafe fn read_str<'a>(ptr: *const c_char) -> Option<&'a str> {
    if ptr.is_null() {
        return None;
    }
    CStr::from_ptr(ptr).to_str().ok()
}

fn emit_string(out: *mut *mut c_char, text: String) -> HpStatus {
    if out.is_null() {
        return HpStatus::Usage;
    }
    match CString::new(text) {
        Ok(s) => {
            unsafe { *out = s.into_raw() };
            HpStatus::Ok
        }
        Err(_) => HpStatus::Internal,
    }
}

fn emit_graph(out: *mut *mut HpGraph, graph: HalinGraph) -> HpStatus {
    if out.is_null() {
        return HpStatus::Usage;
    }
    unsafe { *out = Box::into_raw(Box::new(HpGraph { inner: graph })) };
    HpStatus::Ok
}

fn guarded(body: impl FnOnce() -> HpStatus) -> HpStatus {
    catch_unwind(AssertUnwindSafe(body)).unwrap_or(HpStatus::Internal)
}

/// Frees a string returned by this library.
///
/// # Safety
/// `s` must be null or a pointer previously returned by a `hp_*` function and
/// not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hp_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Frees a graph handle.
///
/// # Safety
/// `g` must be null or a handle previously returned by this library and not
/// yet freed.
#[no_mangle]
pub unsafe extern "C" fn hp_graph_free(g: *mut HpGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Parses a graph from the JSON interchange format.
///
/// # Safety
/// `json` must be a valid NUL-terminated string; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hp_graph_from_json(
    json: *const c_char,
    out: *mut *mut HpGraph,
) -> HpStatus {
    guarded(|| {
        let Some(text) = read_str(json) else {
            return HpStatus::Usage;
        };
        match halin_from_json(text) {
            Ok(graph) => emit_graph(out, graph),
            Err(err) => classify(&err),
        }
    })
}

/// Builds a named instance: "K4", "prism6", or "G1".
///
/// # Safety
/// `name` must be a valid NUL-terminated string; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hp_graph_named(name: *const c_char, out: *mut *mut HpGraph) -> HpStatus {
    guarded(|| {
        let Some(text) = read_str(name) else {
            return HpStatus::Usage;
        };
        match text.parse::<InstanceName>() {
            Ok(instance) => emit_graph(out, named_instance(instance)),
            Err(err) => classify(&err),
        }
    })
}

/// Deterministic random growth with the given internal vertex count and seed.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hp_graph_random(
    internal: u32,
    seed: u64,
    out: *mut *mut HpGraph,
) -> HpStatus {
    guarded(|| match random_cubic_halin(internal as usize, seed) {
        Ok(graph) => emit_graph(out, graph),
        Err(err) => classify(&err),
    })
}

/// Total number of vertices, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn hp_graph_order(g: *const HpGraph) -> u32 {
    if g.is_null() {
        return 0;
    }
    (*g).inner.order() as u32
}

/// Serializes a graph into the JSON interchange format. The caller frees the
/// string with `hp_string_free`.
///
/// # Safety
/// `g` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hp_graph_to_json(
    g: *const HpGraph,
    out: *mut *mut c_char,
) -> HpStatus {
    guarded(|| {
        if g.is_null() {
            return HpStatus::Usage;
        }
        let doc = halin_to_json(&(*g).inner);
        emit_string(out, doc.to_string())
    })
}

/// Runs a constructive colorer ("1123", "122222", or "lemma1") and returns
/// the coloring JSON.
///
/// # Safety
/// `g` must be a live handle, `schedule` a valid string, `out` valid.
#[no_mangle]
pub unsafe extern "C" fn hp_color(
    g: *const HpGraph,
    schedule: *const c_char,
    out: *mut *mut c_char,
) -> HpStatus {
    guarded(|| {
        if g.is_null() {
            return HpStatus::Usage;
        }
        let Some(kind) = read_str(schedule) else {
            return HpStatus::Usage;
        };
        let graph = &(*g).inner;
        let (values, coloring, diagnostics) = match kind {
            "1123" => match color_1123(graph) {
                Ok((c, d)) => (vec![1, 1, 2, 3], c, Some(d)),
                Err(err) => return classify(&err),
            },
            "122222" => match color_122222(graph) {
                Ok((c, d)) => (vec![1, 2, 2, 2, 2, 2], c, Some(d)),
                Err(err) => return classify(&err),
            },
            "lemma1" => {
                let tree = PlaneCubicTree::from_halin(graph);
                (vec![1, 2, 2, 2], lemma1_tree_coloring(&tree), None)
            }
            _ => return HpStatus::Usage,
        };
        let s = SPacking::new(values).expect("static schedules");
        let doc = coloring_to_json(&s, &coloring, graph.names(), diagnostics.as_ref());
        emit_string(out, doc.to_string())
    })
}

/// Verifies a coloring JSON against a hyphen-separated schedule. Returns Ok
/// for valid, Unsat for invalid, and writes the report JSON when `out` is
/// non-null.
///
/// # Safety
/// `g` must be a live handle; `schedule` and `coloring_json` valid strings.
#[no_mangle]
pub unsafe extern "C" fn hp_verify(
    g: *const HpGraph,
    schedule: *const c_char,
    coloring_json: *const c_char,
    out: *mut *mut c_char,
) -> HpStatus {
    guarded(|| {
        if g.is_null() {
            return HpStatus::Usage;
        }
        let (Some(schedule), Some(coloring)) = (read_str(schedule), read_str(coloring_json))
        else {
            return HpStatus::Usage;
        };
        let graph = &(*g).inner;
        let parsed: SPacking = match schedule.parse() {
            Ok(s) => s,
            Err(err) => return classify(&err),
        };
        let (_, coloring) = match coloring_from_json(coloring, graph.names()) {
            Ok(pair) => pair,
            Err(err) => return classify(&err),
        };
        let full = graph.full_graph();
        let oracle = match all_pairs_distances(&full) {
            Ok(o) => o,
            Err(err) => return classify(&err),
        };
        let report = match verify_packing(&full, &parsed, &coloring, &oracle) {
            Ok(r) => r,
            Err(err) => return classify(&err),
        };
        if !out.is_null() {
            let doc = serde_json::json!({
                "format_version": halin_packing::json::FORMAT_VERSION,
                "valid": report.valid(),
                "violation_count": report.violations.len(),
            });
            let status = emit_string(out, doc.to_string());
            if status != HpStatus::Ok {
                return status;
            }
        }
        if report.valid() {
            HpStatus::Ok
        } else {
            HpStatus::Unsat
        }
    })
}

/// Exact decision for a hyphen-separated schedule. Status mirrors the solve
/// outcome; the result JSON (status, node count, coloring if Sat) lands in
/// `out` when non-null. Zero limits mean the defaults.
///
/// # Safety
/// `g` must be a live handle; `schedule` a valid string.
#[no_mangle]
pub unsafe extern "C" fn hp_decide(
    g: *const HpGraph,
    schedule: *const c_char,
    node_limit: u64,
    time_limit_ms: u64,
    out: *mut *mut c_char,
) -> HpStatus {
    guarded(|| {
        if g.is_null() {
            return HpStatus::Usage;
        }
        let Some(schedule) = read_str(schedule) else {
            return HpStatus::Usage;
        };
        let graph = &(*g).inner;
        let parsed: SPacking = match schedule.parse() {
            Ok(s) => s,
            Err(err) => return classify(&err),
        };
        let mut cfg = SearchConfig::default();
        if node_limit > 0 {
            cfg.node_limit = node_limit;
        }
        if time_limit_ms > 0 {
            cfg.time_limit = Duration::from_millis(time_limit_ms);
        }
        let result = match decide(&graph.full_graph(), &parsed, &cfg) {
            Ok(r) => r,
            Err(err) => return classify(&err),
        };
        let status = match &result.status {
            SolveStatus::Sat(_) => HpStatus::Ok,
            SolveStatus::Unsat => HpStatus::Unsat,
            SolveStatus::Unknown => HpStatus::Unknown,
        };
        if !out.is_null() {
            let mut doc = serde_json::json!({
                "format_version": halin_packing::json::FORMAT_VERSION,
                "schedule": parsed.values(),
                "status": result.status.name(),
                "nodes_explored": result.nodes_explored,
            });
            if let SolveStatus::Sat(c) = &result.status {
                let colors: serde_json::Map<String, serde_json::Value> = graph
                    .names()
                    .iter()
                    .enumerate()
                    .filter_map(|(v, name)| {
                        c.class_of(v)
                            .map(|class| (name.clone(), serde_json::json!(class)))
                    })
                    .collect();
                doc["coloring"] = serde_json::Value::Object(colors);
            }
            let emit = emit_string(out, doc.to_string());
            if emit != HpStatus::Ok {
                return emit;
            }
        }
        status
    })
}
