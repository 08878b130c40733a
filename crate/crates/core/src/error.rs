use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero in Q(q)")]
    DivisionByZero,
    #[error("pole at q = {at}: denominator has factor {factor} with multiplicity {multiplicity}")]
    Pole {
        at: String,
        factor: String,
        multiplicity: usize,
    },
    #[error("parameter error: {0}")]
    Param(String),
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("usage error: {0}")]
    Usage(String),
    #[error("{0}")]
    Math(String),
}

impl Error {
    pub fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }

    /// Whether the error stems from bad input rather than a failed computation.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::Param(_) | Error::Parse { .. } | Error::Usage(_) | Error::Pole { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
