//! Error type shared by all modules of the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A vertex label does not belong to the vertex set.
    #[error("unknown vertex label {0:?}")]
    UnknownVertex(String),

    /// A hyperedge is a set; repeated vertices are rejected.
    #[error("duplicate vertex {0:?} in hyperedge")]
    DuplicateVertex(String),

    /// A hyperedge carries at least one vertex.
    #[error("a hyperedge needs at least one vertex")]
    EmptyHyperedge,

    /// Requested dimension is outside 0..=#V-1.
    #[error("dimension {dimension} out of range for {vertices} vertices")]
    DimensionOutOfRange { dimension: usize, vertices: usize },

    /// Two hypergraphs built over different vertex sets were combined.
    #[error("hypergraphs are defined over different vertex sets")]
    VertexSetMismatch,

    /// The vertex set exceeds the configured size cap.
    #[error("vertex set has {count} labels, exceeding the cap of {limit}")]
    VertexLimitExceeded { count: usize, limit: usize },

    /// Chain-complex construction requires closure under faces.
    #[error("hypergraph is not a simplicial complex")]
    NotSimplicial,

    /// Cochain-complex construction requires closure under supersets.
    #[error("hypergraph is not a co-simplicial complex")]
    NotCosimplicial,

    /// An operator had the wrong grade parity for its role.
    #[error("operator grade {found} is not {required}")]
    GradeParity {
        required: &'static str,
        found: usize,
    },

    /// An even-grade operator failed to commute with the boundary. This is
    /// unreachable for well-formed inputs and indicates an internal bug.
    #[error("map operator does not commute with the boundary")]
    NotAChainMap,
}
