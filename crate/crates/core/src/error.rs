use thiserror::Error;

/// Errors raised by constructors, parsers and the geometric procedures.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("color {value} at cell ({row},{col}) is outside 1..={colors}")]
    ColorOutOfRange {
        row: usize,
        col: usize,
        value: u32,
        colors: u32,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("format error on line {line}: {message}")]
    Format { line: usize, message: String },

    #[error("model error: {0}")]
    Model(String),

    #[error("node budget exhausted while deciding size {size}")]
    BudgetExceeded { size: usize },

    #[error("procedure failed: {0}")]
    Procedure(String),
}

impl Error {
    pub(crate) fn format(line: usize, message: impl Into<String>) -> Self {
        Error::Format {
            line,
            message: message.into(),
        }
    }

    pub(crate) fn param(message: impl Into<String>) -> Self {
        Error::InvalidParameter(message.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
