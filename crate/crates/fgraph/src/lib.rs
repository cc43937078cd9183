//! Graph-family generators, subdivision/line-graph transforms, exact
//! degree-based topological indices (Zagreb, forgotten index and their
//! coindices), and a sweep verifier that compares direct computation
//! against a registry of closed-form expressions.
//!
//! The typical pipeline is: build a [`families::FamilySpec`], generate its
//! [`graph::Graph`], and either compute indices from [`indices`] or let
//! [`verifier`] sweep whole parameter grids and report where the closed
//! forms in [`closed_forms`] agree or disagree with direct computation.
//!
//! All arithmetic is exact and checked, generic over [`scalar::IndexScalar`];
//! `IndexInt` (`i64`) is the default working type.

pub mod cli;
pub mod closed_forms;
pub mod families;
pub mod graph;
pub mod indices;
pub mod scalar;
pub mod transforms;
pub mod verifier;

pub use graph::{DegreeMultiset, EdgeListError, Graph, GraphError};
pub use scalar::{IndexScalar, Overflow};

/// Default exact scalar for index values and closed-form evaluation.
pub type IndexInt = i64;
/// Wide scalar for inputs that exceed `IndexInt` headroom.
pub type IndexIntWide = i128;
