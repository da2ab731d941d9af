use thiserror::Error;

use crate::solver::SolveStats;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed graph6 or digraph text; `offset` is the byte position of the
    /// first offending character.
    #[error("format error at byte {offset}: {message}")]
    Format { offset: usize, message: String },

    #[error("unsupported size: {0}")]
    UnsupportedSize(String),

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// The solver hit its node budget before reaching a verdict.
    #[error("search budget of {budget} nodes exhausted ({} nodes explored)", stats.nodes)]
    Resource { budget: u64, stats: SolveStats },
}

impl Error {
    pub(crate) fn format(offset: usize, message: impl Into<String>) -> Self {
        Error::Format {
            offset,
            message: message.into(),
        }
    }

    pub(crate) fn argument(message: impl Into<String>) -> Self {
        Error::Argument(message.into())
    }

    pub(crate) fn precondition(message: impl Into<String>) -> Self {
        Error::Precondition(message.into())
    }
}
