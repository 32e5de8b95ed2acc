use thiserror::Error;

/// Errors raised by the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("ring contexts differ")]
    RingMismatch,

    #[error("exponent overflow")]
    Overflow,

    #[error("domain error: {0}")]
    Domain(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("resource limit exceeded: {0}")]
    Resource(String),

    #[error("no stabilization after {steps} steps: {what}")]
    Stabilization { what: String, steps: usize },

    #[error("saturation plan failed validation at n = {n:?}")]
    PlanValidation { n: Vec<u32> },

    #[error("{line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error("invalid table: {0}")]
    Table(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn pre(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}
