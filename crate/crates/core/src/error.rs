use thiserror::Error;

/// Errors raised by the library.
///
/// The CLI maps these onto exit codes through [`Error::kind`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at {at}: denominator vanishes")]
    Pole { at: String },
    #[error("zero {what} has no {needed}")]
    Zero { what: &'static str, needed: &'static str },
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("precondition violated ({clause}): {detail}")]
    Precondition { clause: &'static str, detail: String },
    #[error("index {index} exceeds the configured bound {bound}")]
    IndexOverflow { index: usize, bound: usize },
    #[error("uncertified: {0}")]
    Uncertified(String),
    #[error("backend is not a finite field: {0}")]
    BackendNotFinite(String),
    #[error("coefficient {value} is not representable modulo {p}")]
    NotReducible { value: String, p: u64 },
    #[error("verification failed: {0}")]
    Verification(String),
}

/// Coarse classification used for exit statuses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Precondition,
    Parse,
    Uncertified,
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Parse { .. } => ErrorKind::Parse,
            Error::Uncertified(_) => ErrorKind::Uncertified,
            _ => ErrorKind::Precondition,
        }
    }

    pub(crate) fn precondition(clause: &'static str, detail: impl Into<String>) -> Self {
        Error::Precondition { clause, detail: detail.into() }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
