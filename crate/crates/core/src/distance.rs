//! All-pairs shortest-path distances, stored as a dense matrix.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{GenericGraph, VertexId};

/// Vertex bound for the dense matrix; larger graphs are rejected.
pub const DEFAULT_MAX_ORACLE_VERTICES: usize = 4096;

/// Exact unweighted shortest-path distances for all vertex pairs.
#[derive(Debug, Clone)]
pub struct DistanceOracle {
    n: usize,
    dist: Vec<u32>,
}

impl DistanceOracle {
    pub fn new(g: &GenericGraph) -> Result<Self> {
        Self::with_limit(g, DEFAULT_MAX_ORACLE_VERTICES)
    }

    pub fn with_limit(g: &GenericGraph, max_vertices: usize) -> Result<Self> {
        let n = g.vertex_count();
        if n > max_vertices {
            return Err(Error::OracleTooLarge {
                vertices: n,
                cap: max_vertices,
            });
        }
        let mut dist = vec![u32::MAX; n * n];
        let mut queue = VecDeque::new();
        for source in 0..n {
            let row = &mut dist[source * n..(source + 1) * n];
            row[source] = 0;
            queue.push_back(source);
            while let Some(u) = queue.pop_front() {
                let du = row[u];
                for &v in g.neighbors(u) {
                    if row[v] == u32::MAX {
                        row[v] = du + 1;
                        queue.push_back(v);
                    }
                }
            }
            if row.iter().any(|&d| d == u32::MAX) {
                return Err(Error::Disconnected);
            }
        }
        let oracle = DistanceOracle { n, dist };
        debug_assert!(oracle.sanity_check(g));
        Ok(oracle)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn distance(&self, u: VertexId, v: VertexId) -> u32 {
        self.dist[u * self.n + v]
    }

    // Symmetry, zero diagonal, triangle inequality, unit distance = adjacency.
    // Quadratic-plus checks, so only run on desk-sized graphs under debug.
    fn sanity_check(&self, g: &GenericGraph) -> bool {
        if self.n > 128 {
            return true;
        }
        for u in 0..self.n {
            if self.distance(u, u) != 0 {
                return false;
            }
            for v in 0..self.n {
                if self.distance(u, v) != self.distance(v, u) {
                    return false;
                }
                if (self.distance(u, v) == 1) != g.has_edge(u, v) {
                    return false;
                }
                for w in 0..self.n {
                    if self.distance(u, w) > self.distance(u, v) + self.distance(v, w) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Distances of `g`; fails with `Disconnected` if any pair is unreachable.
pub fn all_pairs_distances(g: &GenericGraph) -> Result<DistanceOracle> {
    DistanceOracle::new(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph_all_ones() {
        let g = GenericGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
            .unwrap();
        let d = all_pairs_distances(&g).unwrap();
        for u in 0..4 {
            for v in 0..4 {
                assert_eq!(d.distance(u, v), u32::from(u != v));
            }
        }
    }

    #[test]
    fn path_distance_two() {
        let g = GenericGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let d = all_pairs_distances(&g).unwrap();
        assert_eq!(d.distance(0, 2), 2);
    }

    #[test]
    fn oversized_rejected() {
        let g = GenericGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(matches!(
            DistanceOracle::with_limit(&g, 2),
            Err(Error::OracleTooLarge { .. })
        ));
    }
}
