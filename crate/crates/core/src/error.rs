use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph with {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },

    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),

    #[error("source and sink must differ (both are {0})")]
    SourceIsSink(usize),

    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("instance too large for exhaustive oracle: {what} is {actual}, limit is {limit}")]
    OracleGuard {
        what: &'static str,
        actual: usize,
        limit: usize,
    },

    #[error("partial witness: vertex {0} has no color")]
    PartialWitness(usize),

    #[error("regression needs at least 3 distinct sizes, got {0}")]
    TooFewSizes(usize),
}
