//! S-packing colorings of cubic Halin graphs.
//!
//! A Halin graph is a plane tree of order at least four with no degree-2
//! vertices, closed by a cycle through its leaves; in the cubic case every
//! vertex of the closed graph has degree 3. This crate provides:
//!
//! - validated graph types, a distance oracle, and a packing-coloring verifier;
//! - constructive colorers: a (1,1,2,3) coloring and a (1,2,2,2,2,2) coloring
//!   of any cubic Halin graph, plus a (1,2,2,2) coloring of cubic trees with
//!   all leaves in class 1;
//! - an exhaustive exact solver for S-packing colorability, with survey
//!   batching over graph/schedule pairs;
//! - generators: named instances, seeded random growth, and isomorphism-free
//!   enumeration;
//! - edge subdivision with the coloring lift onto it, and JSON/DOT interchange
//!   used by the `halinpack` command-line tool.

pub mod canon;
pub mod constructive;
pub mod distance;
pub mod dot;
pub mod error;
pub mod generators;
pub mod graph;
pub mod halin;
pub mod json;
pub mod packing;
pub mod solver;
pub mod subdivision;
pub mod survey;

pub use distance::{all_pairs_distances, DistanceOracle};
pub use error::{Error, Result};
pub use graph::{GenericGraph, VertexId};
pub use halin::{build_closure, build_halin, HalinClosure, HalinGraph};
pub use packing::{verify_packing, Coloring, SPacking, VerificationReport};
pub use subdivision::{lift_coloring, subdivide};
