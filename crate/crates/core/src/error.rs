use alloc::string::String;

/// Errors raised by the calculus. Verification failures are never errors;
/// they are reported as [`crate::VerificationReport`] content.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{what} = {value} exceeds the configured bound {bound}")]
    BoundExceeded {
        what: &'static str,
        value: usize,
        bound: usize,
    },
    #[error("the empty partition is not allowed here")]
    EmptyPartition,
    #[error("size mismatch: expected {expected}, got {actual}")]
    SizeMismatch { expected: usize, actual: usize },
    #[error("the zero object has no minimal annihilating partition")]
    ZeroObject,
    #[error("cannot split 1 -> X: X has no copy of the unit in degree 0")]
    InvalidSplit,
    #[error("an ideal may not contain the empty partition")]
    ImproperIdeal,
    #[error("the ideal is empty")]
    EmptyIdeal,
    #[error("set is not upward closed: {0}")]
    NotUpwardClosed(String),
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
}

pub type Result<T> = core::result::Result<T, Error>;

pub(crate) fn check_bound(what: &'static str, value: usize, bound: usize) -> Result<()> {
    if value > bound {
        Err(Error::BoundExceeded { what, value, bound })
    } else {
        Ok(())
    }
}
