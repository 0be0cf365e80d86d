//! S-packing schedules, colorings, and the packing verifier.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::distance::DistanceOracle;
use crate::error::{Error, Result};
use crate::graph::{GenericGraph, VertexId};

/// A non-decreasing sequence (s_1, ..., s_k): class i keeps its vertices at
/// pairwise distance at least s_i + 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SPacking {
    s: Vec<u32>,
}

impl SPacking {
    pub fn new(s: Vec<u32>) -> Result<Self> {
        if s.is_empty() {
            return Err(Error::BadSchedule("schedule is empty".into()));
        }
        if s.iter().any(|&x| x == 0) {
            return Err(Error::BadSchedule("entries must be positive".into()));
        }
        if s.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::BadSchedule(format!(
                "sequence {s:?} is not non-decreasing"
            )));
        }
        Ok(SPacking { s })
    }

    /// The full schedule (1, 2, ..., k) of the packing chromatic number.
    pub fn standard(k: u32) -> Self {
        SPacking {
            s: (1..=k).collect(),
        }
    }

    pub fn class_count(&self) -> usize {
        self.s.len()
    }

    /// s_i for a 1-based class index.
    pub fn constraint(&self, class: u32) -> u32 {
        self.s[(class - 1) as usize]
    }

    pub fn values(&self) -> &[u32] {
        &self.s
    }

    /// Componentwise comparison: self is weaker-or-equal if s_i <= other_i.
    pub fn componentwise_le(&self, other: &SPacking) -> bool {
        self.s.len() == other.s.len() && self.s.iter().zip(&other.s).all(|(a, b)| a <= b)
    }
}

impl fmt::Display for SPacking {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.s.iter().map(u32::to_string).collect();
        write!(f, "{}", parts.join("-"))
    }
}

impl FromStr for SPacking {
    type Err = Error;

    /// Parses "1-1-2-3" style strings plus the shorthands "1123" and "122222".
    fn from_str(text: &str) -> Result<Self> {
        let expanded = match text {
            "1123" => "1-1-2-3",
            "122222" => "1-2-2-2-2-2",
            other => other,
        };
        let s = expanded
            .split('-')
            .map(|p| {
                p.parse::<u32>()
                    .map_err(|_| Error::BadSchedule(format!("bad entry {p:?} in {text:?}")))
            })
            .collect::<Result<Vec<u32>>>()?;
        SPacking::new(s)
    }
}

/// Assignment of vertices to 1-based class indices; partial during search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    assign: Vec<Option<u32>>,
}

impl Coloring {
    pub fn empty(vertex_count: usize) -> Self {
        Coloring {
            assign: vec![None; vertex_count],
        }
    }

    pub fn from_classes(classes: Vec<u32>) -> Self {
        Coloring {
            assign: classes.into_iter().map(Some).collect(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.assign.len()
    }

    pub fn class_of(&self, v: VertexId) -> Option<u32> {
        self.assign[v]
    }

    pub fn set(&mut self, v: VertexId, class: u32) {
        self.assign[v] = Some(class);
    }

    pub fn clear(&mut self, v: VertexId) {
        self.assign[v] = None;
    }

    pub fn is_total(&self) -> bool {
        self.assign.iter().all(Option::is_some)
    }

    /// Vertices currently holding the given class, ascending.
    pub fn class_members(&self, class: u32) -> Vec<VertexId> {
        self.assign
            .iter()
            .enumerate()
            .filter(|(_, c)| **c == Some(class))
            .map(|(v, _)| v)
            .collect()
    }

    /// Swaps two class labels everywhere.
    pub fn swap_classes(&mut self, a: u32, b: u32) {
        for slot in &mut self.assign {
            if *slot == Some(a) {
                *slot = Some(b);
            } else if *slot == Some(b) {
                *slot = Some(a);
            }
        }
    }
}

/// One violated pair: same class at distance <= s_class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub u: VertexId,
    pub v: VertexId,
    pub class: u32,
    pub distance: u32,
}

/// Outcome of verification; valid iff no violations.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub violations: Vec<Violation>,
}

impl VerificationReport {
    pub fn valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks every same-class pair against the distance oracle.
///
/// The coloring must be total and every class must lie in 1..=k.
pub fn verify_packing(
    g: &GenericGraph,
    s: &SPacking,
    c: &Coloring,
    oracle: &DistanceOracle,
) -> Result<VerificationReport> {
    let n = g.vertex_count();
    assert_eq!(oracle.vertex_count(), n, "oracle does not match the graph");
    assert_eq!(c.vertex_count(), n, "coloring does not match the graph");
    let k = s.class_count() as u32;
    for v in 0..n {
        match c.class_of(v) {
            None => return Err(Error::PartialColoring(v)),
            Some(class) if class == 0 || class > k => {
                return Err(Error::ClassOutOfRange {
                    vertex: v,
                    class,
                    max: k,
                });
            }
            Some(_) => {}
        }
    }
    let mut violations = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            let (cu, cv) = (c.class_of(u).unwrap(), c.class_of(v).unwrap());
            if cu == cv {
                let d = oracle.distance(u, v);
                if d < s.constraint(cu) + 1 {
                    violations.push(Violation {
                        u,
                        v,
                        class: cu,
                        distance: d,
                    });
                }
            }
        }
    }
    Ok(VerificationReport { violations })
}
