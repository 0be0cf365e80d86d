//! Sources of cubic Halin graphs: named paper instances, seeded random
//! growth, and exhaustive isomorphism-reduced enumeration.

use std::collections::HashMap;
use std::str::FromStr;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::canon::canonical_form;
use crate::error::{Error, Result};
use crate::graph::VertexId;
use crate::halin::HalinGraph;

/// Largest total order the enumerator accepts by default. The shape count
/// grows like the Catalan numbers, so this stays deliberately small.
pub const DEFAULT_ENUMERATION_CAP: usize = 20;

/// A plane tree with all degrees 1 or 3; its left-to-right leaf order is a
/// valid Halin cycle order by construction.
#[derive(Debug, Clone)]
pub struct PlaneCubicTree {
    adjacency: Vec<Vec<VertexId>>,
    leaf_order: Vec<VertexId>,
}

impl PlaneCubicTree {
    pub fn new(adjacency: Vec<Vec<VertexId>>, leaf_order: Vec<VertexId>) -> Result<Self> {
        let order = adjacency.len();
        if order < 4 {
            return Err(Error::BadTree(format!("order {order} is below 4")));
        }
        for (v, nbrs) in adjacency.iter().enumerate() {
            if nbrs.len() != 1 && nbrs.len() != 3 {
                return Err(Error::BadTree(format!(
                    "vertex {v} has degree {}, expected 1 or 3",
                    nbrs.len()
                )));
            }
        }
        let leaves: Vec<VertexId> = (0..order).filter(|&v| adjacency[v].len() == 1).collect();
        let mut listed = leaf_order.clone();
        listed.sort_unstable();
        if listed != leaves {
            return Err(Error::BadTree(
                "leaf order does not list exactly the degree-1 vertices".into(),
            ));
        }
        Ok(PlaneCubicTree {
            adjacency,
            leaf_order,
        })
    }

    /// The characteristic tree of a Halin graph, with the cycle as leaf order.
    pub fn from_halin(h: &HalinGraph) -> Self {
        let adjacency = (0..h.order()).map(|v| h.tree_neighbors(v).to_vec()).collect();
        PlaneCubicTree {
            adjacency,
            leaf_order: h.cycle_order().to_vec(),
        }
    }

    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v].len()
    }

    pub fn is_leaf(&self, v: VertexId) -> bool {
        self.adjacency[v].len() == 1
    }

    pub fn leaf_order(&self) -> &[VertexId] {
        &self.leaf_order
    }

    pub fn tree_edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::new();
        for (u, nbrs) in self.adjacency.iter().enumerate() {
            for &v in nbrs {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Closes the leaves into a cycle; full Halin validation applies.
    pub fn to_halin(&self) -> Result<HalinGraph> {
        HalinGraph::from_dense(&self.tree_edges(), &self.leaf_order)
    }
}

/// Distinguished instances used as fixtures and regressions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InstanceName {
    /// Closure of the order-4 star; the complete graph on four vertices.
    K4,
    /// The unique cubic Halin graph on 6 vertices (the triangular prism).
    Prism6,
    /// Spider with three branch vertices, two leaves each; 10 vertices.
    /// Not (1,1,3,3)-packing colorable.
    G1,
}

impl FromStr for InstanceName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "K4" => Ok(InstanceName::K4),
            "prism6" => Ok(InstanceName::Prism6),
            "G1" => Ok(InstanceName::G1),
            other => Err(Error::UnknownName(other.into())),
        }
    }
}

pub fn named_instance(name: InstanceName) -> HalinGraph {
    let build = |edges: &[(usize, usize)], cycle: &[usize]| {
        HalinGraph::from_dense(edges, cycle).expect("named instances are valid")
    };
    match name {
        InstanceName::K4 => build(&[(0, 1), (0, 2), (0, 3)], &[1, 2, 3]),
        InstanceName::Prism6 => build(&[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)], &[2, 3, 4, 5]),
        InstanceName::G1 => build(
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (1, 4),
                (1, 5),
                (2, 6),
                (2, 7),
                (3, 8),
                (3, 9),
            ],
            &[4, 5, 6, 7, 8, 9],
        ),
    }
}

/// Grows a random plane cubic tree: starting from the star, repeatedly turn a
/// uniformly chosen leaf into an internal vertex by attaching two children.
/// Deterministic for a fixed (num_internal, seed); not uniform over
/// isomorphism classes.
pub fn random_cubic_halin(num_internal: usize, seed: u64) -> Result<HalinGraph> {
    if num_internal == 0 {
        return Err(Error::InvalidSize(
            "need at least one internal vertex".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut adjacency: Vec<Vec<VertexId>> = vec![vec![1, 2, 3], vec![0], vec![0], vec![0]];
    // Kept in traversal order: expanding a leaf splices its children in place,
    // so this is always a valid cycle order.
    let mut leaves: Vec<VertexId> = vec![1, 2, 3];
    for _ in 1..num_internal {
        let slot = rng.gen_range(0..leaves.len());
        let v = leaves[slot];
        let a = adjacency.len();
        let b = a + 1;
        adjacency.push(vec![v]);
        adjacency.push(vec![v]);
        adjacency[v].push(a);
        adjacency[v].push(b);
        leaves.splice(slot..=slot, [a, b]);
    }
    PlaneCubicTree::new(adjacency, leaves)?.to_halin()
}

/// All plane cubic trees with at most `max_vertices` vertices, deterministic
/// order, not isomorphism-reduced: one tree per full binary shape.
pub fn enumerate_plane_cubic_trees(max_vertices: usize) -> Result<Vec<PlaneCubicTree>> {
    check_bounds(max_vertices, DEFAULT_ENUMERATION_CAP)?;
    let mut out = Vec::new();
    let mut internal = 1;
    while 2 * internal + 2 <= max_vertices {
        // Rooting a plane cubic tree at a leaf turns the rest into a full
        // binary tree, so the binary shapes cover every embedded tree.
        for shape in binary_shapes(internal) {
            out.push(shape_to_tree(&shape));
        }
        internal += 1;
    }
    Ok(out)
}

/// One representative per isomorphism class of cubic Halin graph with at most
/// `max_vertices` vertices, in a deterministic order.
pub fn enumerate_cubic_halin(max_vertices: usize) -> Result<Vec<HalinGraph>> {
    enumerate_cubic_halin_with_cap(max_vertices, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_cubic_halin_with_cap(max_vertices: usize, cap: usize) -> Result<Vec<HalinGraph>> {
    check_bounds(max_vertices, cap)?;
    let mut out = Vec::new();
    let mut internal = 1;
    while 2 * internal + 2 <= max_vertices {
        // Distinct embeddings of one abstract tree can close into
        // non-isomorphic graphs, so dedup runs on the closed graph.
        let mut classes: HashMap<Vec<u32>, HalinGraph> = HashMap::new();
        for shape in binary_shapes(internal) {
            let halin = shape_to_tree(&shape)
                .to_halin()
                .expect("closure of a plane cubic tree is a cubic Halin graph");
            let key = canonical_form(&halin.full_graph());
            classes.entry(key).or_insert(halin);
        }
        let mut keyed: Vec<(Vec<u32>, HalinGraph)> = classes.into_iter().collect();
        keyed.sort_by(|a, b| a.0.cmp(&b.0));
        out.extend(keyed.into_iter().map(|(_, h)| h));
        internal += 1;
    }
    Ok(out)
}

fn check_bounds(max_vertices: usize, cap: usize) -> Result<()> {
    if max_vertices < 4 {
        return Err(Error::InvalidSize(format!(
            "max_vertices {max_vertices} is below the smallest cubic Halin order 4"
        )));
    }
    if max_vertices > cap {
        return Err(Error::BoundTooLarge {
            requested: max_vertices,
            cap,
        });
    }
    Ok(())
}

/// Full binary tree shape: the structure below the root of a leaf-rooted
/// plane cubic tree.
#[derive(Debug, Clone)]
enum Shape {
    Leaf,
    Node(Box<Shape>, Box<Shape>),
}

fn binary_shapes(internal: usize) -> Vec<Shape> {
    if internal == 0 {
        return vec![Shape::Leaf];
    }
    let mut out = Vec::new();
    for left_internal in 0..internal {
        for left in binary_shapes(left_internal) {
            for right in binary_shapes(internal - 1 - left_internal) {
                out.push(Shape::Node(Box::new(left.clone()), Box::new(right)));
            }
        }
    }
    out
}

fn shape_to_tree(shape: &Shape) -> PlaneCubicTree {
    // Vertex 0 is the root leaf, vertex 1 the binary root attached to it.
    let mut adjacency: Vec<Vec<VertexId>> = vec![vec![1]];
    let mut leaf_order: Vec<VertexId> = vec![0];
    fn build(
        shape: &Shape,
        parent: Option<VertexId>,
        adjacency: &mut Vec<Vec<VertexId>>,
        leaf_order: &mut Vec<VertexId>,
    ) -> VertexId {
        let v = adjacency.len();
        adjacency.push(parent.into_iter().collect());
        match shape {
            Shape::Leaf => leaf_order.push(v),
            Shape::Node(left, right) => {
                let l = build(left, Some(v), adjacency, leaf_order);
                let r = build(right, Some(v), adjacency, leaf_order);
                adjacency[v].push(l);
                adjacency[v].push(r);
            }
        }
        v
    }
    match shape {
        Shape::Leaf => unreachable!("top-level shape always has an internal root"),
        Shape::Node(left, right) => {
            let root = 1;
            adjacency.push(vec![0]);
            let l = build(left, Some(root), &mut adjacency, &mut leaf_order);
            let r = build(right, Some(root), &mut adjacency, &mut leaf_order);
            adjacency[root].push(l);
            adjacency[root].push(r);
        }
    }
    PlaneCubicTree::new(adjacency, leaf_order).expect("generated shape is a plane cubic tree")
}
