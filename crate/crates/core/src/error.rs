use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// An internal consistency check failed (multiset underflow, non-integral
    /// closed form, ...). Seeing this means a bug or an input outside the
    /// operation's domain.
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("degenerate random sample: {0}")]
    DegenerateSample(String),

    #[error("unknown {kind} `{name}` (available: {available})")]
    UnknownStrategy {
        kind: &'static str,
        name: String,
        available: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidArgument(msg.into()))
}
