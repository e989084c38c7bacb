use thiserror::Error;

/// Errors raised by the algebra, representation and learning routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed textual or JSON input. `pos` is a byte offset into the input.
    #[error("parse error at position {pos}: {msg} (near {token:?})")]
    Parse {
        msg: String,
        token: String,
        pos: usize,
    },

    /// The operation is not defined for these operands.
    #[error("{0}")]
    Domain(String),

    /// Hankel rank did not stabilize inside the explored window.
    #[error("inconclusive: {0}")]
    Inconclusive(String),

    /// An internal invariant was violated. Indicates a bug.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub fn parse(msg: impl Into<String>, token: impl Into<String>, pos: usize) -> Self {
        Error::Parse {
            msg: msg.into(),
            token: token.into(),
            pos,
        }
    }

    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn alphabet_mismatch() -> Self {
        Error::Domain("alphabet mismatch".into())
    }

    pub(crate) fn no_antipode() -> Self {
        Error::Domain("no antipode: group-like letters present".into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
