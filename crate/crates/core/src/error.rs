use thiserror::Error;

use crate::graph::Edge;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoverError {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),

    #[error("pair {0} is not an edge")]
    NotAnEdge(Edge),

    #[error("pair {0} is already an edge")]
    AlreadyAnEdge(Edge),

    #[error("pair {0} appears more than once")]
    DuplicatePair(Edge),

    #[error("graph is not connected")]
    NotConnected,

    #[error("graph is not a tree")]
    NotATree,

    #[error("graph is not chordal: later neighbours of vertex {witness} do not form a clique")]
    NotChordal { witness: usize },

    #[error("{0} is not a valid completion set")]
    NotACompletion(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl CoverError {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        CoverError::InvalidInput(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, CoverError>;
