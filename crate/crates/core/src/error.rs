use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph not connected: vertex {unreachable} is unreachable from vertex {origin}")]
    NotConnected { origin: usize, unreachable: usize },

    #[error("no pairs: the Hosoya polynomial needs at least two vertices")]
    NoPairs,

    #[error("vertex {vertex} out of range for a graph on {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),

    #[error("invalid Hosoya polynomial: {0}")]
    InvalidPolynomial(&'static str),

    #[error("graph must have at least one vertex")]
    EmptyGraph,

    #[error("parameters outside supported range: m={m}, n={n} ({constraint})")]
    LadderRange { m: usize, n: usize, constraint: &'static str },

    #[error("block index q={q} out of range 0..={max} for m={m}")]
    BlockIndex { q: usize, m: usize, max: usize },

    #[error("m={m} outside supported range ({constraint})")]
    MRange { m: usize, constraint: &'static str },
}
