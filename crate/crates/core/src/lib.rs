//! Exact computations for p-improper interval graphs: impropriety by
//! exhaustive search over clique layouts, side-component analysis, and
//! censuses of minimal forbidden interval subgraphs.

pub mod canon;
pub mod census;
pub mod enumerate;
pub mod error;
pub mod figures;
pub mod graph;
pub mod graph6;
pub mod impropriety;
pub mod interval;
pub mod structure;

pub use canon::{canonical_form, canonical_graph6, CanonicalForm};
pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use graph6::{parse_graph6, to_graph6};
