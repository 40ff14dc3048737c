use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameters: p ≥ 1 violated (p={p})")]
    DistanceNotPositive { p: i64 },

    #[error("invalid parameters: n ≥ 2p violated (n={n}, p={p})")]
    TooFewVertices { n: i64, p: i64 },

    #[error("invalid parameters: k ≥ 1 violated (k={k})")]
    FoldNotPositive { k: i64 },

    #[error("arithmetic overflow: {what} exceeds 2^40")]
    Overflow { what: &'static str },

    #[error("vertex {vertex} out of range for a graph on {vertex_count} vertices")]
    VertexOutOfRange { vertex: i64, vertex_count: usize },

    #[error("instance too large: {what} is {size}, limit is {limit}")]
    InstanceTooLarge {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("malformed coloring: {0}")]
    MalformedColoring(String),

    #[error("malformed graph: {0}")]
    MalformedGraph(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

impl Error {
    /// Parameter validation failures, as opposed to size limits or bad input files.
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            Error::DistanceNotPositive { .. }
                | Error::TooFewVertices { .. }
                | Error::FoldNotPositive { .. }
                | Error::Overflow { .. }
                | Error::VertexOutOfRange { .. }
        )
    }
}
