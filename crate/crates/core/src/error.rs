use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("parse error in {input:?} at {position}: {message}")]
    Parse {
        input: String,
        position: usize,
        message: String,
    },

    /// The input is well-formed but violates a mathematical precondition.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A check that holds for every valid input failed.
    #[error("internal error: {0}")]
    Internal(String),

    #[error("degree cap {cap} exceeded while {context}")]
    DegreeCap { cap: i64, context: String },
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }

    /// Process exit code: 2 for bad input, 3 for internal failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } | Error::InvalidInput(_) => 2,
            Error::Internal(_) | Error::DegreeCap { .. } => 3,
        }
    }
}
