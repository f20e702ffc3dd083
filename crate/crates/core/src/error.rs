use thiserror::Error;

/// Errors produced by capacity queries, network ingestion and the oracle.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameter `{field}`: {reason}")]
    InvalidParameter { field: &'static str, reason: String },

    #[error("malformed network document at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid network: {0}")]
    Validation(String),

    #[error("unknown edge `{0}`")]
    UnknownEdge(String),

    #[error("no route between alice and bob")]
    NoRoute,

    #[error("network has {points} points, oracle enumeration is capped at {max}")]
    TooLarge { points: usize, max: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn invalid(field: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter {
            field,
            reason: reason.into(),
        }
    }
}
