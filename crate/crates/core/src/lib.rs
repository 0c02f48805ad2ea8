//! Exact discrete calculus on finite vertex sets: hypergraphs, simplicial and
//! co-simplicial complexes, path spaces, the exterior algebras of discrete
//! derivatives, and the generalized (co)homology groups they define.
//!
//! All coefficients are arbitrary-precision rationals, so ranks, Betti
//! numbers and induced-map matrices are bit-exact.

pub mod calculus;
pub mod error;
pub mod geometry;
pub mod homology;
pub mod hypergraph;
pub mod linalg;
pub mod paths;

pub use calculus::{d_insert, d_partial, CodiffForm, DiffForm};
pub use error::{Error, Result};
pub use geometry::{CellDescriptor, ComplementCellsReport, DisjointnessReport, Embedding};
pub use homology::{DegreeIndex, GradedComplex, HomologyResult, InducedMap, Variance};
pub use hypergraph::{Hyperedge, Hypergraph, VertexSet};
pub use linalg::{Matrix, Rational};
pub use paths::{ElementaryPath, PathClass, PathVector};
