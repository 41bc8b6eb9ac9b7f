use thiserror::Error;

/// Errors raised across the crate.
///
/// `Contract` covers precondition violations (out-of-range indices, zero
/// forms where a nonzero one is required, and so on). `PropertyViolation` is
/// reserved for runtime cross-checks that disagree; seeing one means either a
/// bug or a counterexample to one of the identities being checked.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension error: expected a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension error: {0}")]
    Dimension(String),

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("property violation: {0}")]
    PropertyViolation(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

macro_rules! contract {
    ($cond:expr, $($arg:tt)+) => {
        if !$cond {
            return Err($crate::error::Error::Contract(format!($($arg)+)));
        }
    };
}

pub(crate) use contract;
