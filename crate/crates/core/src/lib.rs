//! Plane-graph analysis for planar Turán problems on linked and disjoint
//! cycle pairs: planarity with embeddings, face statistics, 3-face-block
//! decompositions, extremal constructions and exhaustive small-order search.

pub mod canon;
pub mod constructions;
pub mod embedding;
pub mod error;
pub mod face_blocks;
pub mod graph;
pub mod graph6;
pub mod patterns;
pub mod search;
pub mod vset;

pub use error::{Error, Result};
pub use graph::Graph;
pub use vset::VertexSet;
