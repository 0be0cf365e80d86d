//! Exhaustive decision procedure for S-packing colorability.
//!
//! Plain depth-first branch-and-prune: the next vertex is the one with the
//! most colored vertices within reach (fail-first), classes are checked
//! against the distance oracle, and labels of equal-constraint classes are
//! broken symmetrically. Unsat is claimed only after full exhaustion; hitting
//! a limit yields Unknown.

use std::time::{Duration, Instant};

use crate::distance::DistanceOracle;
use crate::error::{Error, Result};
use crate::graph::{GenericGraph, VertexId};
use crate::packing::{verify_packing, Coloring, SPacking};

/// Schedules longer than this are rejected.
pub const MAX_SCHEDULE_CLASSES: usize = 16;

#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub node_limit: u64,
    pub time_limit: Duration,
    pub symmetry_breaking: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            node_limit: 100_000_000,
            time_limit: Duration::from_secs(60),
            symmetry_breaking: true,
        }
    }
}

#[derive(Debug, Clone)]
pub enum SolveStatus {
    Sat(Coloring),
    Unsat,
    Unknown,
}

impl SolveStatus {
    pub fn is_sat(&self) -> bool {
        matches!(self, SolveStatus::Sat(_))
    }

    pub fn is_unsat(&self) -> bool {
        matches!(self, SolveStatus::Unsat)
    }

    pub fn name(&self) -> &'static str {
        match self {
            SolveStatus::Sat(_) => "Sat",
            SolveStatus::Unsat => "Unsat",
            SolveStatus::Unknown => "Unknown",
        }
    }
}

#[derive(Debug, Clone)]
pub struct SolveResult {
    pub status: SolveStatus,
    pub nodes_explored: u64,
    pub elapsed: Duration,
}

/// Decides whether g admits an S-packing coloring, within the given limits.
/// Deterministic: fixed inputs give the same status and node count.
pub fn decide(g: &GenericGraph, s: &SPacking, cfg: &SearchConfig) -> Result<SolveResult> {
    if s.class_count() > MAX_SCHEDULE_CLASSES {
        return Err(Error::ScheduleTooLong(s.class_count(), MAX_SCHEDULE_CLASSES));
    }
    let oracle = DistanceOracle::new(g)?;
    let started = Instant::now();
    let mut search = Search {
        oracle: &oracle,
        constraints: s.values(),
        max_reach: *s.values().iter().max().expect("schedule nonempty"),
        symmetry_breaking: cfg.symmetry_breaking,
        colors: vec![0; g.vertex_count()],
        members: vec![Vec::new(); s.class_count()],
        nodes: 0,
        node_limit: cfg.node_limit,
        deadline: started.checked_add(cfg.time_limit),
    };
    let outcome = search.run();
    let status = match outcome {
        Outcome::Sat => {
            let coloring = Coloring::from_classes(search.colors.clone());
            let report = verify_packing(g, s, &coloring, &oracle)?;
            assert!(report.valid(), "search returned an invalid coloring");
            SolveStatus::Sat(coloring)
        }
        Outcome::Exhausted => SolveStatus::Unsat,
        Outcome::Limit => SolveStatus::Unknown,
    };
    Ok(SolveResult {
        status,
        nodes_explored: search.nodes,
        elapsed: started.elapsed(),
    })
}

#[derive(PartialEq)]
enum Outcome {
    Sat,
    Exhausted,
    Limit,
}

struct Search<'a> {
    oracle: &'a DistanceOracle,
    constraints: &'a [u32],
    max_reach: u32,
    symmetry_breaking: bool,
    /// 0 = uncolored, else 1-based class index.
    colors: Vec<u32>,
    members: Vec<Vec<VertexId>>,
    nodes: u64,
    node_limit: u64,
    deadline: Option<Instant>,
}

impl Search<'_> {
    fn run(&mut self) -> Outcome {
        let Some(v) = self.pick_vertex() else {
            return Outcome::Sat;
        };
        let k = self.constraints.len();
        for class in 1..=k as u32 {
            if self.symmetry_breaking && self.skippable(class) {
                continue;
            }
            if !self.admissible(v, class) {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.node_limit {
                return Outcome::Limit;
            }
            if self.nodes % 1024 == 0 {
                if let Some(deadline) = self.deadline {
                    if Instant::now() > deadline {
                        return Outcome::Limit;
                    }
                }
            }
            self.colors[v] = class;
            self.members[(class - 1) as usize].push(v);
            let outcome = self.run();
            if outcome != Outcome::Exhausted {
                return outcome;
            }
            self.members[(class - 1) as usize].pop();
            self.colors[v] = 0;
        }
        Outcome::Exhausted
    }

    /// Uncolored vertex with most colored vertices within max(s_i) reach;
    /// ties go to the smallest id. None when the coloring is total.
    fn pick_vertex(&self) -> Option<VertexId> {
        let n = self.colors.len();
        let mut best: Option<(usize, VertexId)> = None;
        for v in 0..n {
            if self.colors[v] != 0 {
                continue;
            }
            let nearby = (0..n)
                .filter(|&u| self.colors[u] != 0 && self.oracle.distance(u, v) <= self.max_reach)
                .count();
            match best {
                Some((score, _)) if nearby <= score => {}
                _ => best = Some((nearby, v)),
            }
        }
        best.map(|(_, v)| v)
    }

    /// Among classes with equal constraints, a later label may only open once
    /// all earlier ones are in use.
    fn skippable(&self, class: u32) -> bool {
        let i = (class - 1) as usize;
        if self.members[i].is_empty() {
            for j in (0..i).rev() {
                if self.constraints[j] != self.constraints[i] {
                    break;
                }
                if self.members[j].is_empty() {
                    return true;
                }
            }
        }
        false
    }

    fn admissible(&self, v: VertexId, class: u32) -> bool {
        let bound = self.constraints[(class - 1) as usize] + 1;
        self.members[(class - 1) as usize]
            .iter()
            .all(|&u| self.oracle.distance(u, v) >= bound)
    }
}

/// Outcome of a packing chromatic number query bounded by k_max.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChromaticBound {
    Exact(u32),
    NotWithinBound,
}

/// Least k <= k_max with a (1,2,...,k)-packing coloring; limits propagate as
/// `Error::LimitReached`.
pub fn packing_chromatic_number(
    g: &GenericGraph,
    k_max: u32,
    cfg: &SearchConfig,
) -> Result<ChromaticBound> {
    for k in 1..=k_max {
        let result = decide(g, &SPacking::standard(k), cfg)?;
        match result.status {
            SolveStatus::Sat(_) => return Ok(ChromaticBound::Exact(k)),
            SolveStatus::Unsat => {}
            SolveStatus::Unknown => return Err(Error::LimitReached),
        }
    }
    Ok(ChromaticBound::NotWithinBound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{named_instance, InstanceName};

    fn cycle(n: usize) -> GenericGraph {
        let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        GenericGraph::from_edges(n, &edges).unwrap()
    }

    fn schedule(values: &[u32]) -> SPacking {
        SPacking::new(values.to_vec()).unwrap()
    }

    #[test]
    fn paper_sharpness_regressions() {
        let cfg = SearchConfig::default();
        let g1 = named_instance(InstanceName::G1).full_graph();
        assert!(decide(&g1, &schedule(&[1, 1, 3, 3]), &cfg).unwrap().status.is_unsat());
        assert!(decide(&g1, &schedule(&[1, 2, 3, 4]), &cfg).unwrap().status.is_unsat());
        assert!(decide(&g1, &schedule(&[1, 1, 2, 3]), &cfg).unwrap().status.is_sat());

        let prism = named_instance(InstanceName::Prism6).full_graph();
        assert!(decide(&prism, &schedule(&[1, 2, 2, 2]), &cfg).unwrap().status.is_unsat());
        assert!(decide(&prism, &schedule(&[1, 2, 2, 2, 2, 2]), &cfg).unwrap().status.is_sat());
    }

    #[test]
    fn known_chromatic_numbers() {
        let cfg = SearchConfig::default();
        assert_eq!(
            packing_chromatic_number(&cycle(4), 8, &cfg).unwrap(),
            ChromaticBound::Exact(3)
        );
        let edge = GenericGraph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(
            packing_chromatic_number(&edge, 8, &cfg).unwrap(),
            ChromaticBound::Exact(2)
        );
        let k4 = named_instance(InstanceName::K4).full_graph();
        assert_eq!(
            packing_chromatic_number(&k4, 8, &cfg).unwrap(),
            ChromaticBound::Exact(4)
        );
    }

    #[test]
    fn not_within_bound() {
        let k4 = named_instance(InstanceName::K4).full_graph();
        assert_eq!(
            packing_chromatic_number(&k4, 3, &SearchConfig::default()).unwrap(),
            ChromaticBound::NotWithinBound
        );
    }

    #[test]
    fn node_limit_gives_unknown() {
        let g1 = named_instance(InstanceName::G1).full_graph();
        let cfg = SearchConfig {
            node_limit: 3,
            ..SearchConfig::default()
        };
        let result = decide(&g1, &schedule(&[1, 1, 3, 3]), &cfg).unwrap();
        assert!(matches!(result.status, SolveStatus::Unknown));
    }

    #[test]
    fn determinism_of_node_counts() {
        let g1 = named_instance(InstanceName::G1).full_graph();
        let cfg = SearchConfig::default();
        let a = decide(&g1, &schedule(&[1, 1, 3, 3]), &cfg).unwrap();
        let b = decide(&g1, &schedule(&[1, 1, 3, 3]), &cfg).unwrap();
        assert_eq!(a.nodes_explored, b.nodes_explored);
        assert_eq!(a.status.name(), b.status.name());
    }

    #[test]
    fn symmetry_breaking_preserves_status() {
        let prism = named_instance(InstanceName::Prism6).full_graph();
        for values in [[1u32, 2, 2, 2].as_slice(), [1, 1, 2, 3].as_slice()] {
            let s = schedule(values);
            let with = decide(&prism, &s, &SearchConfig::default()).unwrap();
            let without = decide(
                &prism,
                &s,
                &SearchConfig {
                    symmetry_breaking: false,
                    ..SearchConfig::default()
                },
            )
            .unwrap();
            assert_eq!(with.status.is_sat(), without.status.is_sat());
        }
    }

    #[test]
    fn long_schedule_rejected() {
        let edge = GenericGraph::from_edges(2, &[(0, 1)]).unwrap();
        let s = SPacking::standard(17);
        assert!(matches!(
            decide(&edge, &s, &SearchConfig::default()),
            Err(Error::ScheduleTooLong(17, _))
        ));
    }
}
