use thiserror::Error;

/// Errors raised by parsing, matching, construction and verification.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("unknown letter `{0}`")]
    UnknownLetter(String),

    #[error("empty pattern")]
    EmptyPattern,

    #[error("word of length {len} exceeds the materialization cap {cap}")]
    TooLarge { len: String, cap: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("sample is inconsistent with the target: {0}")]
    InconsistentSample(String),

    #[error("search budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("construction check failed: {0}")]
    Construction(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn pre(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}
