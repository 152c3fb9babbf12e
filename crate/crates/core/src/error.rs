use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph6 parse error at byte {index}: {reason}")]
    Graph6 { index: usize, reason: String },

    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("vertex set must be nonempty")]
    EmptyVertexSet,

    #[error("vertex count {0} outside supported range 1..=16")]
    VertexCount(usize),

    #[error("capacity exceeded: {what} is {actual}, limit {limit}")]
    Capacity {
        what: &'static str,
        actual: usize,
        limit: usize,
    },

    #[error("not an interval graph")]
    NotInterval,

    #[error("graph is disconnected")]
    Disconnected,

    #[error("vertex set is not a local component of vertex {0}")]
    NotLocalComponent(usize),

    #[error("local component is not a potential side component of vertex {0}")]
    NotPotentialSide(usize),

    #[error("invalid clique layout: {0}")]
    InvalidLayout(String),
}

pub type Result<T> = std::result::Result<T, Error>;
