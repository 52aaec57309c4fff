use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Malformed { line: usize, msg: String },

    #[error("self-loop on vertex `{0}`")]
    SelfLoop(String),

    #[error("empty input")]
    EmptyInput,

    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("size guard exceeded: order {order} > limit {limit}")]
    SizeGuard { order: usize, limit: usize },

    /// An internal invariant of the algorithm failed. Always a bug.
    #[error("invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    /// True for errors that signal a bug rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Invariant(_))
    }
}
