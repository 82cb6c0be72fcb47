use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty front word")]
    EmptyWord,

    #[error("event {index} ({event}) is out of range for {strands} strands")]
    PositionOutOfRange {
        index: usize,
        event: String,
        strands: usize,
    },

    #[error("front is not closed: {strands} strands remain after the last event")]
    UnbalancedClosure { strands: usize },

    #[error("syntax error at line {line}, column {col}: {message}")]
    Syntax {
        line: usize,
        col: usize,
        message: String,
    },

    #[error("invalid grid diagram: {0}")]
    InvalidGrid(String),

    #[error("unknown component {index} (front has {count})")]
    UnknownComponent { index: usize, count: usize },

    #[error("linking number needs two distinct components, got {0} twice")]
    SameComponent(usize),

    #[error("operation needs a knot, front has {0} components")]
    NotAKnot(usize),

    #[error("move {0} does not apply to this front")]
    InapplicableMove(String),

    #[error("component {0} carries more than one 2-handle")]
    DuplicateHandle(usize),

    #[error("diagram has {crossings} crossings, bracket limit is {limit}")]
    TooLarge { crossings: usize, limit: usize },

    #[error("malformed diagram code: {0}")]
    MalformedCode(String),

    #[error("invalid render settings: {0}")]
    InvalidRenderSpec(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
