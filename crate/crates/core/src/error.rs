use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong before an algorithm gets to run.
///
/// Contract violations of proven bounds are not represented here: those
/// panic, because they would falsify a theorem rather than reject an input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("graph contains K4 on vertices {0:?}")]
    NotK4Free([usize; 4]),

    #[error("graph has no triangle")]
    NoTriangle,

    #[error("instance of size {size} exceeds capacity {limit}")]
    Capacity { size: usize, limit: usize },

    #[error("vertex {0} appears in more than one class")]
    Overlap(usize),

    #[error("invalid input: {0}")]
    Input(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("reduced graph contains K4 on classes {0:?}; partition does not satisfy the H-free assumption")]
    ReducedGraphNotK4Free([usize; 4]),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }
}
