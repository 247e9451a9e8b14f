use thiserror::Error;

/// Errors raised by structure operations, certificate transformations and the
/// CLI front end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("element is not positive: {0}")]
    NotPositive(String),
    #[error("missing capability: {0}")]
    Capability(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("not invertible: {0}")]
    NotInvertible(String),
    #[error("evaluation error: {0}")]
    Evaluation(String),
    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("unknown {kind}: {name}")]
    Unknown { kind: &'static str, name: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn not_positive(e: &impl std::fmt::Display) -> Self {
        Error::NotPositive(e.to_string())
    }

    pub(crate) fn capability(what: impl Into<String>) -> Self {
        Error::Capability(what.into())
    }

    /// True when the error means "this structure cannot run the check", as
    /// opposed to a failed check.
    pub fn is_capability(&self) -> bool {
        matches!(self, Error::Capability(_) | Error::NotInvertible(_))
    }
}
