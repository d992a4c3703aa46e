use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("characteristic {0} is not prime")]
    NotPrime(u64),
    #[error("invalid variable list: {0}")]
    InvalidVariables(String),
    #[error("operands live in different rings")]
    ContextMismatch,
    #[error("exponent vectors have widths {left} and {right}")]
    WidthMismatch { left: usize, right: usize },
    #[error("exponent overflow{0}")]
    ExponentOverflow(String),
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("internal error: {0}")]
    Internal(String),
    #[error("skipped: depends on failed level {0}")]
    Skipped(u32),
}

impl Error {
    pub(crate) fn overflow() -> Self {
        Error::ExponentOverflow(String::new())
    }

    /// Attach a location description to an overflow error; other errors pass through.
    pub(crate) fn in_context(self, what: impl FnOnce() -> String) -> Self {
        match self {
            Error::ExponentOverflow(s) if s.is_empty() => {
                Error::ExponentOverflow(format!(" {}", what()))
            }
            other => other,
        }
    }

    /// Errors caused by the computation itself rather than by bad input.
    pub fn is_computational(&self) -> bool {
        matches!(
            self,
            Error::ExponentOverflow(_)
                | Error::ResourceLimit(_)
                | Error::Internal(_)
                | Error::Skipped(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
