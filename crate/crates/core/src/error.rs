use thiserror::Error;

use crate::report::CheckReport;

/// Errors raised by the kernel.
#[derive(Debug, Error)]
pub enum Error {
    /// A mathematically undefined request, e.g. inverting zero.
    #[error("domain error: {0}")]
    Domain(String),

    /// The caller combined objects that do not fit together.
    #[error("usage error: {0}")]
    Usage(String),

    /// Exhaustive enumeration was requested beyond the configured cap.
    #[error("enumeration of {size} elements exceeds the cap of {cap}")]
    CapExceeded { size: u128, cap: u64 },

    /// A construction would exceed its configured size bound.
    #[error("size bound exceeded: {what} needs {size}, bound is {bound}")]
    SizeBound { what: String, size: usize, bound: usize },

    /// A precondition check failed; the report carries the witnesses.
    #[error("precondition `{}` failed", .0.identity)]
    Precondition(Box<CheckReport>),

    /// Malformed algebra file.
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn usage(msg: impl Into<String>) -> Error {
    Error::Usage(msg.into())
}
