use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    /// Cycle-notation input could not be parsed. `position` is a 0-based
    /// character offset into the input text.
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    /// The permutation is not an involution; `point` is a witness with
    /// alpha(alpha(point)) != point.
    #[error("not an involution: witness point {point}")]
    NotAnInvolution { point: usize },

    /// Requested data (d/g exponents) is only defined for regular diagrams.
    #[error("diagram is not regular")]
    NotRegular,

    /// The Koszul dual quasi-diagram exists only when gldim = n - 1.
    #[error("no Koszul dual: global dimension of the degree-{degree} diagram is not {}", degree.saturating_sub(1))]
    NoKoszulDual { degree: usize },

    #[error("domain error: {0}")]
    Domain(String),

    /// A structural invariant the construction guarantees was violated.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: message.into(),
        }
    }

    pub(crate) fn domain(message: impl Into<String>) -> Self {
        Error::Domain(message.into())
    }

    pub(crate) fn internal(message: impl Into<String>) -> Self {
        Error::Internal(message.into())
    }
}
