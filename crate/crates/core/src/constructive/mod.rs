//! Constructive packing colorings of cubic Halin graphs.
//!
//! Three colorers, each returning a verifier-valid coloring:
//! - [`color_1123`]: every cubic Halin graph is (1,1,2,3)-packing colorable.
//!   A proper 2-coloring of the tree is repaired on the cycle with period-4
//!   patterns, then tree shortcuts are resolved conflict by conflict.
//! - [`lemma1_tree_coloring`]: every tree with degrees in {1,3} admits a
//!   (1,2,2,2)-packing coloring with all leaves in class 1.
//! - [`color_122222`]: the tree coloring above plus a block recoloring of the
//!   cycle gives a (1,2,2,2,2,2)-packing coloring.
//!
//! Both Halin colorers end with full verification; if the literal procedure
//! ever produces an invalid coloring, the exact solver repairs it and the
//! diagnostics record `fallback_used`.

mod coloring_1123;
mod coloring_122222;
mod tree_coloring;

pub use coloring_1123::color_1123;
pub use coloring_122222::color_122222;
pub use tree_coloring::lemma1_tree_coloring;

use serde::Serialize;

use crate::graph::VertexId;
use crate::halin::HalinGraph;
use crate::packing::Coloring;

/// Class indices for the (1,1,2,3) schedule: 1, 1', 2, 3.
pub const CLASS_1: u32 = 1;
pub const CLASS_1P: u32 = 2;
pub const CLASS_2: u32 = 3;
pub const CLASS_3: u32 = 4;

/// Which branch of the (1,1,2,3) procedure ran.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CaseTaken {
    /// Some consecutive cycle pair has tree colors (1', 1).
    Case1,
    /// All cycle vertices share one tree color.
    Case2,
    /// K4: the only instance whose tree vertex has three cycle neighbors.
    SpecialK4,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ConflictKind {
    /// Two same-colored cycle vertices share a tree neighbor. Cannot occur;
    /// a record of this kind marks an internal error.
    Type1,
    /// Two class-3 cycle vertices joined by a tree path of length 3.
    Type2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Resolution {
    /// The midpoint vertex was moved to class 2 and the endpoint recolored.
    AssignedX2,
    /// As above, plus the 1/1' switch over the region of the third neighbor.
    SwitchedOneClasses,
    /// Pattern rewrite next to the far endpoint (2/3 switch along the arc).
    SubcaseI,
    /// Single recoloring of the 2-colored cycle neighbor of the endpoint.
    SubcaseII,
    /// The conflict had already dissolved when its turn came.
    NoneNeeded,
}

/// One detected conflict and how it was handled.
#[derive(Debug, Clone, Serialize)]
pub struct ConflictRecord {
    pub kind: ConflictKind,
    pub x: VertexId,
    pub y: Option<VertexId>,
    pub a_i: VertexId,
    pub a_j: VertexId,
    pub resolution: Resolution,
}

/// Trace of a constructive run.
#[derive(Debug, Clone, Serialize)]
pub struct ColoringDiagnostics {
    /// Case split of the (1,1,2,3) procedure; absent for the block tiling of
    /// the (1,2,2,2,2,2) colorer.
    pub case_taken: Option<CaseTaken>,
    pub n_mod_4: u8,
    pub conflicts: Vec<ConflictRecord>,
    /// True whenever the output did not come from the literal procedure
    /// (cycle completion or exact-solver repair).
    pub fallback_used: bool,
}

impl ColoringDiagnostics {
    fn new(n: usize) -> Self {
        ColoringDiagnostics {
            case_taken: None,
            n_mod_4: (n % 4) as u8,
            conflicts: Vec::new(),
            fallback_used: false,
        }
    }
}

/// Proper 2-coloring of the characteristic tree with classes {1, 1'}:
/// the lowest-numbered internal vertex gets class 1 and classes alternate
/// with tree distance from it.
pub fn two_color_tree(h: &HalinGraph) -> Coloring {
    let root = h
        .internal_vertices()
        .next()
        .expect("a Halin tree has internal vertices");
    let mut coloring = Coloring::empty(h.order());
    let mut stack = vec![(root, CLASS_1)];
    coloring.set(root, CLASS_1);
    while let Some((u, class)) = stack.pop() {
        let next = if class == CLASS_1 { CLASS_1P } else { CLASS_1 };
        for &v in h.tree_neighbors(u) {
            if coloring.class_of(v).is_none() {
                coloring.set(v, next);
                stack.push((v, next));
            }
        }
    }
    coloring
}
