//! Simple connected undirected graphs over dense vertex ids.

use crate::error::{Error, Result};

pub type VertexId = usize;

/// Undirected simple graph with vertices `0..vertex_count`.
///
/// Construction rejects loops, duplicate edges, and disconnected inputs;
/// adjacency lists are kept sorted so iteration order is deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenericGraph {
    adjacency: Vec<Vec<VertexId>>,
}

impl GenericGraph {
    pub fn from_edges(vertex_count: usize, edges: &[(VertexId, VertexId)]) -> Result<Self> {
        let mut adjacency = vec![Vec::new(); vertex_count];
        for &(u, v) in edges {
            if u == v {
                return Err(Error::InvalidInput(format!("self-loop at vertex {u}")));
            }
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::InvalidInput(format!(
                    "edge ({u},{v}) references a vertex outside 0..{vertex_count}"
                )));
            }
            if adjacency[u].contains(&v) {
                return Err(Error::InvalidInput(format!("duplicate edge ({u},{v})")));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        let g = GenericGraph { adjacency };
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges as (u, v) pairs with u < v, in sorted order.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, nbrs) in self.adjacency.iter().enumerate() {
            for &v in nbrs {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_regular(&self, d: usize) -> bool {
        self.adjacency.iter().all(|l| l.len() == d)
    }

    fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return false;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &v in &self.adjacency[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == n
    }
}
