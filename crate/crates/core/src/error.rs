use thiserror::Error;

use crate::poset::Ambient;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The caller handed over a value that violates a documented invariant.
    #[error("invalid input: {0}")]
    Input(String),

    #[error("ambient mismatch: {left} vs {right}")]
    AmbientMismatch { left: Ambient, right: Ambient },

    /// An enumeration would have produced more than `cap` elements.
    #[error("enumeration cap exceeded: more than {cap} elements")]
    CapExceeded { cap: usize },

    /// An internal invariant failed. Reaching this is a bug.
    #[error("internal invariant violated: {0}")]
    Defect(String),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn defect(msg: impl Into<String>) -> Self {
        Error::Defect(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
