use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The requested object exceeds a configured size limit.
    #[error("capacity exceeded: {what} needs {required} vertices, limit is {limit}")]
    Capacity {
        what: String,
        required: u128,
        limit: usize,
    },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("graph {graph} has an edge of multiplicity {multiplicity} between vertices {u} and {v}")]
    UnexpectedMultiEdge {
        graph: String,
        u: usize,
        v: usize,
        multiplicity: u8,
    },

    #[error("graph {graph} is not bipartite: {reason}")]
    NotBipartite { graph: String, reason: String },

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    /// An exact check that a construction must pass did not pass.
    #[error("verification failed for {vector}: {detail}")]
    VerificationFailed { vector: String, detail: String },
}

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidArgument(msg.into()))
}
