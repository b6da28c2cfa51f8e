use thiserror::Error;

use crate::graph::{Girth, Vertex};

/// Errors raised by graph construction, parsing and the Grundy engines.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GrundyError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("graph is not connected")]
    DisconnectedInput,
    #[error("graph is not a block graph")]
    NotBlockGraph,
    #[error("vertex {0} is not a cut-vertex")]
    NotCutVertex(Vertex),
    #[error("graph has no cut-vertex")]
    NoCutVertex,
    #[error("graph is not a tree")]
    NotATree,
    #[error("girth {girth} is below the required {required}")]
    GirthTooSmall { girth: Girth, required: usize },
    #[error("k = {k} exceeds (g+1)/2 for girth {girth}")]
    KTooLargeForGirth { k: usize, girth: Girth },
    #[error("order is not a permutation of the vertex set")]
    NotAPermutation,
    #[error("graph has {n} vertices, oracle cap is {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("method mismatch: {0}")]
    MethodMismatch(String),
    #[error("witness construction failed: {0}")]
    WitnessFailed(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for GrundyError {
    fn from(err: std::io::Error) -> Self {
        GrundyError::Io(err.to_string())
    }
}

pub type Result<T, E = GrundyError> = std::result::Result<T, E>;
