//! Halin graphs: a characteristic tree plus a cycle through its leaves.
//!
//! A cubic Halin graph has every tree vertex of degree 1 or 3; closing the
//! leaves into a cycle in plane order makes the whole graph 3-regular. The
//! plane embedding is encoded combinatorially: for every tree edge, the
//! leaves on each side must occupy a contiguous arc of the cycle.

use crate::error::{Error, Result};
use crate::graph::{GenericGraph, VertexId};

/// Validated cubic Halin graph over dense vertex ids with a retained name table.
#[derive(Debug, Clone)]
pub struct HalinGraph {
    tree_adjacency: Vec<Vec<VertexId>>,
    cycle_order: Vec<VertexId>,
    cycle_position: Vec<Option<usize>>,
    names: Vec<String>,
}

/// Closure of a possibly non-cubic Halin structure, for the verifier and
/// solver, which accept any Halin graph.
#[derive(Debug, Clone)]
pub struct HalinClosure {
    pub graph: GenericGraph,
    pub tree_edges: Vec<(VertexId, VertexId)>,
    pub names: Vec<String>,
    pub cycle_len: usize,
}

/// Builds and validates a cubic Halin graph from named tree edges and a leaf cycle.
pub fn build_halin(tree_edges: &[(String, String)], cycle_order: &[String]) -> Result<HalinGraph> {
    let parts = assemble(tree_edges, cycle_order, true)?;
    Ok(HalinGraph {
        tree_adjacency: parts.tree_adjacency,
        cycle_order: parts.cycle_order,
        cycle_position: parts.cycle_position,
        names: parts.names,
    })
}

/// Relaxed closure: internal tree vertices may have degree above 3.
pub fn build_closure(tree_edges: &[(String, String)], cycle_order: &[String]) -> Result<HalinClosure> {
    let parts = assemble(tree_edges, cycle_order, false)?;
    let graph = closure_graph(&parts.tree_adjacency, &parts.cycle_order);
    let mut dense_edges = Vec::new();
    for (u, nbrs) in parts.tree_adjacency.iter().enumerate() {
        for &v in nbrs {
            if u < v {
                dense_edges.push((u, v));
            }
        }
    }
    Ok(HalinClosure {
        graph,
        tree_edges: dense_edges,
        names: parts.names,
        cycle_len: parts.cycle_order.len(),
    })
}

impl HalinGraph {
    /// Convenience constructor over integer ids.
    pub fn from_dense(tree_edges: &[(usize, usize)], cycle_order: &[usize]) -> Result<HalinGraph> {
        let edges: Vec<(String, String)> = tree_edges
            .iter()
            .map(|&(u, v)| (u.to_string(), v.to_string()))
            .collect();
        let cycle: Vec<String> = cycle_order.iter().map(usize::to_string).collect();
        build_halin(&edges, &cycle)
    }

    /// Total number of vertices.
    pub fn order(&self) -> usize {
        self.tree_adjacency.len()
    }

    /// Cycle length n (= number of leaves).
    pub fn cycle_len(&self) -> usize {
        self.cycle_order.len()
    }

    pub fn cycle_order(&self) -> &[VertexId] {
        &self.cycle_order
    }

    /// Vertex at a cyclic position (any integer index, wrapped).
    pub fn cycle_vertex(&self, position: isize) -> VertexId {
        let n = self.cycle_order.len() as isize;
        self.cycle_order[position.rem_euclid(n) as usize]
    }

    pub fn cycle_position(&self, v: VertexId) -> Option<usize> {
        self.cycle_position[v]
    }

    pub fn tree_neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.tree_adjacency[v]
    }

    pub fn tree_degree(&self, v: VertexId) -> usize {
        self.tree_adjacency[v].len()
    }

    pub fn is_leaf(&self, v: VertexId) -> bool {
        self.tree_adjacency[v].len() == 1
    }

    pub fn internal_vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.order()).filter(|&v| !self.is_leaf(v))
    }

    /// Tree edges as (u, v) with u < v, sorted.
    pub fn tree_edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::new();
        for (u, nbrs) in self.tree_adjacency.iter().enumerate() {
            for &v in nbrs {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// The unique tree neighbor of a leaf.
    pub fn leaf_parent(&self, leaf: VertexId) -> VertexId {
        debug_assert!(self.is_leaf(leaf));
        self.tree_adjacency[leaf][0]
    }

    pub fn name(&self, v: VertexId) -> &str {
        &self.names[v]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn vertex_by_name(&self, name: &str) -> Option<VertexId> {
        self.names.iter().position(|n| n == name)
    }

    /// G = T plus the cycle edges; 3-regular.
    pub fn full_graph(&self) -> GenericGraph {
        let g = closure_graph(&self.tree_adjacency, &self.cycle_order);
        debug_assert!(g.is_regular(3));
        g
    }

    /// min of the two arc lengths between two cycle vertices along C.
    pub fn cycle_distance(&self, u: VertexId, v: VertexId) -> Result<u32> {
        let pu = self.cycle_position[u].ok_or(Error::NotOnCycle(u))?;
        let pv = self.cycle_position[v].ok_or(Error::NotOnCycle(v))?;
        let n = self.cycle_order.len();
        let forward = (pv + n - pu) % n;
        Ok(forward.min(n - forward) as u32)
    }

    /// Vertices of the tree component containing `start` when the tree edge
    /// (block_a, block_b) is removed. Used for region bookkeeping.
    pub fn tree_component_without_edge(
        &self,
        start: VertexId,
        block_a: VertexId,
        block_b: VertexId,
    ) -> Vec<VertexId> {
        let mut seen = vec![false; self.order()];
        let mut stack = vec![start];
        seen[start] = true;
        let mut out = Vec::new();
        while let Some(u) = stack.pop() {
            out.push(u);
            for &w in &self.tree_adjacency[u] {
                if (u == block_a && w == block_b) || (u == block_b && w == block_a) {
                    continue;
                }
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        out.sort_unstable();
        out
    }
}

struct AssembledParts {
    tree_adjacency: Vec<Vec<VertexId>>,
    cycle_order: Vec<VertexId>,
    cycle_position: Vec<Option<usize>>,
    names: Vec<String>,
}

fn closure_graph(tree_adjacency: &[Vec<VertexId>], cycle_order: &[VertexId]) -> GenericGraph {
    let mut edges = Vec::new();
    for (u, nbrs) in tree_adjacency.iter().enumerate() {
        for &v in nbrs {
            if u < v {
                edges.push((u, v));
            }
        }
    }
    let n = cycle_order.len();
    for i in 0..n {
        edges.push((cycle_order[i], cycle_order[(i + 1) % n]));
    }
    GenericGraph::from_edges(tree_adjacency.len(), &edges)
        .expect("validated Halin structure closes into a simple connected graph")
}

/// Remaps arbitrary ids to dense 0..n-1: numeric order when every id parses
/// as an integer, lexicographic otherwise.
fn dense_ids(tree_edges: &[(String, String)], cycle_order: &[String]) -> Vec<String> {
    let mut names: Vec<String> = tree_edges
        .iter()
        .flat_map(|(a, b)| [a.clone(), b.clone()])
        .chain(cycle_order.iter().cloned())
        .collect();
    names.sort_unstable();
    names.dedup();
    if names.iter().all(|s| s.parse::<u64>().is_ok()) {
        names.sort_by_key(|s| s.parse::<u64>().unwrap());
    }
    names
}

fn assemble(
    tree_edges: &[(String, String)],
    cycle_order: &[String],
    require_cubic: bool,
) -> Result<AssembledParts> {
    if tree_edges.is_empty() {
        return Err(Error::NotATree("no tree edges given".into()));
    }
    let names = dense_ids(tree_edges, cycle_order);
    let order = names.len();
    if order < 4 {
        return Err(Error::OrderTooSmall(order));
    }
    let index: std::collections::HashMap<&str, VertexId> = names
        .iter()
        .enumerate()
        .map(|(i, n)| (n.as_str(), i))
        .collect();
    let index_of = |name: &str| -> VertexId { index[name] };

    let mut tree_adjacency: Vec<Vec<VertexId>> = vec![Vec::new(); order];
    for (a, b) in tree_edges {
        let (u, v) = (index_of(a), index_of(b));
        if u == v {
            return Err(Error::NotATree(format!("self-loop at {a}")));
        }
        if tree_adjacency[u].contains(&v) {
            return Err(Error::NotATree(format!("duplicate edge {a}-{b}")));
        }
        tree_adjacency[u].push(v);
        tree_adjacency[v].push(u);
    }
    for list in &mut tree_adjacency {
        list.sort_unstable();
    }

    if tree_edges.len() != order - 1 || !tree_is_connected(&tree_adjacency) {
        return Err(Error::NotATree(format!(
            "{} edges over {} vertices do not form a connected acyclic graph",
            tree_edges.len(),
            order
        )));
    }

    for (v, nbrs) in tree_adjacency.iter().enumerate() {
        let d = nbrs.len();
        let ok = if require_cubic { d == 1 || d == 3 } else { d == 1 || d >= 3 };
        if !ok {
            return Err(Error::BadDegree {
                vertex: names[v].clone(),
                degree: d,
            });
        }
    }

    // Cycle must list exactly the leaves, each once.
    let mut cycle: Vec<VertexId> = Vec::with_capacity(cycle_order.len());
    let mut cycle_position: Vec<Option<usize>> = vec![None; order];
    for (pos, name) in cycle_order.iter().enumerate() {
        let v = index_of(name);
        if cycle_position[v].is_some() {
            return Err(Error::CycleMismatch(format!("{name} listed twice")));
        }
        if tree_adjacency[v].len() != 1 {
            return Err(Error::CycleMismatch(format!("{name} is not a leaf")));
        }
        cycle_position[v] = Some(pos);
        cycle.push(v);
    }
    let leaf_count = tree_adjacency.iter().filter(|l| l.len() == 1).count();
    if cycle.len() != leaf_count {
        return Err(Error::CycleMismatch(format!(
            "cycle lists {} vertices but the tree has {} leaves",
            cycle.len(),
            leaf_count
        )));
    }

    check_contiguity(&tree_adjacency, &cycle_position, &names)?;

    if require_cubic {
        // Forced by the degree constraints; kept as validation-time checks.
        let internal = order - leaf_count;
        debug_assert_eq!(leaf_count, internal + 2);
        debug_assert_eq!(order % 2, 0, "cubic tree order is even");
        debug_assert!(common_neighbor_leaves_consecutive(
            &tree_adjacency,
            &cycle_position,
            cycle.len()
        ));
    }

    Ok(AssembledParts {
        tree_adjacency,
        cycle_order: cycle,
        cycle_position,
        names,
    })
}

fn tree_is_connected(adjacency: &[Vec<VertexId>]) -> bool {
    let order = adjacency.len();
    let mut seen = vec![false; order];
    let mut stack = vec![0];
    seen[0] = true;
    let mut count = 1;
    while let Some(u) = stack.pop() {
        for &v in &adjacency[u] {
            if !seen[v] {
                seen[v] = true;
                count += 1;
                stack.push(v);
            }
        }
    }
    count == order
}

/// For every tree edge, the leaves of each side must form one contiguous
/// circular arc of the cycle order.
fn check_contiguity(
    tree_adjacency: &[Vec<VertexId>],
    cycle_position: &[Option<usize>],
    names: &[String],
) -> Result<()> {
    let order = tree_adjacency.len();
    let n = cycle_position.iter().filter(|p| p.is_some()).count();
    for u in 0..order {
        for &v in &tree_adjacency[u] {
            if u > v {
                continue;
            }
            let mut marked = vec![false; n];
            let mut seen = vec![false; order];
            let mut stack = vec![u];
            seen[u] = true;
            while let Some(a) = stack.pop() {
                if let Some(p) = cycle_position[a] {
                    marked[p] = true;
                }
                for &b in &tree_adjacency[a] {
                    if (a == u && b == v) || (a == v && b == u) {
                        continue;
                    }
                    if !seen[b] {
                        seen[b] = true;
                        stack.push(b);
                    }
                }
            }
            let blocks = (0..n)
                .filter(|&i| marked[i] && !marked[(i + n - 1) % n])
                .count();
            if blocks != 1 {
                return Err(Error::NonPlanarOrder(names[u].clone(), names[v].clone()));
            }
        }
    }
    Ok(())
}

fn common_neighbor_leaves_consecutive(
    tree_adjacency: &[Vec<VertexId>],
    cycle_position: &[Option<usize>],
    n: usize,
) -> bool {
    for nbrs in tree_adjacency.iter().filter(|l| l.len() > 1) {
        let positions: Vec<usize> = nbrs.iter().filter_map(|&w| cycle_position[w]).collect();
        for (idx, &p) in positions.iter().enumerate() {
            for &q in &positions[idx + 1..] {
                let fwd = (q + n - p) % n;
                if fwd.min(n - fwd) != 1 {
                    return false;
                }
            }
        }
    }
    true
}
