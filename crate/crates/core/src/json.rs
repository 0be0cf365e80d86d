//! JSON interchange formats.
//!
//! Graph: `{"tree_edges": [[id,id],...], "cycle": [id,...]}` where ids are
//! strings or integers. Coloring: `{"schedule": [s1,...,sk], "colors": {id:
//! class}}`. Emitted payloads carry `"format_version": 1`; readers accept
//! documents with or without it.

use serde::Deserialize;
use serde_json::{json, Map, Value};

use crate::constructive::ColoringDiagnostics;
use crate::error::{Error, Result};
use crate::halin::{build_closure, build_halin, HalinClosure, HalinGraph};
use crate::packing::{Coloring, SPacking};

pub const FORMAT_VERSION: u64 = 1;

#[derive(Deserialize)]
#[serde(untagged)]
enum IdValue {
    Int(u64),
    Str(String),
}

impl IdValue {
    fn into_string(self) -> String {
        match self {
            IdValue::Int(v) => v.to_string(),
            IdValue::Str(s) => s,
        }
    }
}

#[derive(Deserialize)]
struct RawGraph {
    tree_edges: Vec<(IdValue, IdValue)>,
    cycle: Vec<IdValue>,
}

fn parse_graph_parts(text: &str) -> Result<(Vec<(String, String)>, Vec<String>)> {
    let raw: RawGraph = serde_json::from_str(text)?;
    let edges = raw
        .tree_edges
        .into_iter()
        .map(|(a, b)| (a.into_string(), b.into_string()))
        .collect();
    let cycle = raw.cycle.into_iter().map(IdValue::into_string).collect();
    Ok((edges, cycle))
}

/// Parses and validates a cubic Halin graph.
pub fn halin_from_json(text: &str) -> Result<HalinGraph> {
    let (edges, cycle) = parse_graph_parts(text)?;
    build_halin(&edges, &cycle)
}

/// Parses a general (possibly non-cubic) Halin structure into its closure.
pub fn closure_from_json(text: &str) -> Result<HalinClosure> {
    let (edges, cycle) = parse_graph_parts(text)?;
    build_closure(&edges, &cycle)
}

fn name_value(name: &str) -> Value {
    match name.parse::<u64>() {
        Ok(v) => json!(v),
        Err(_) => json!(name),
    }
}

/// Canonical graph JSON: dense ids, tree edges sorted, numeric ids emitted as
/// numbers so generated output round-trips byte-identically.
pub fn halin_to_json(h: &HalinGraph) -> Value {
    let tree_edges: Vec<Value> = h
        .tree_edges()
        .iter()
        .map(|&(u, v)| json!([name_value(h.name(u)), name_value(h.name(v))]))
        .collect();
    let cycle: Vec<Value> = h
        .cycle_order()
        .iter()
        .map(|&v| name_value(h.name(v)))
        .collect();
    json!({
        "format_version": FORMAT_VERSION,
        "tree_edges": tree_edges,
        "cycle": cycle,
    })
}

/// Coloring JSON over vertex names, with the schedule inline and optional
/// run diagnostics.
pub fn coloring_to_json(
    schedule: &SPacking,
    coloring: &Coloring,
    names: &[String],
    diagnostics: Option<&ColoringDiagnostics>,
) -> Value {
    let mut colors = Map::new();
    for (v, name) in names.iter().enumerate() {
        if let Some(class) = coloring.class_of(v) {
            colors.insert(name.clone(), json!(class));
        }
    }
    let mut doc = json!({
        "format_version": FORMAT_VERSION,
        "schedule": schedule.values(),
        "colors": Value::Object(colors),
    });
    if let Some(diag) = diagnostics {
        doc["diagnostics"] = serde_json::to_value(diag).expect("diagnostics serialize");
    }
    doc
}

#[derive(Deserialize)]
struct RawColoring {
    schedule: Vec<u32>,
    colors: Map<String, Value>,
}

/// Parses a coloring against a name table. Ids that name no vertex are
/// rejected; vertices missing from the map stay uncolored.
pub fn coloring_from_json(text: &str, names: &[String]) -> Result<(SPacking, Coloring)> {
    let raw: RawColoring = serde_json::from_str(text)?;
    let schedule = SPacking::new(raw.schedule)?;
    let mut coloring = Coloring::empty(names.len());
    for (key, value) in raw.colors {
        let v = names
            .iter()
            .position(|n| *n == key)
            .ok_or_else(|| Error::InvalidInput(format!("coloring names unknown vertex {key:?}")))?;
        let class = value
            .as_u64()
            .ok_or_else(|| Error::InvalidInput(format!("class of {key:?} is not an integer")))?;
        coloring.set(v, class as u32);
    }
    Ok((schedule, coloring))
}
