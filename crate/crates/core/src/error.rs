//! Error type shared by every module in the crate.

/// Errors reported by library operations.
///
/// All integer arithmetic is checked; values that would exceed 63 bits are a
/// [`Error::Domain`] error, never a silent wraparound.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    /// Input outside the operation's domain (bad range, non-prime where a
    /// prime is required, arithmetic overflow).
    #[error("domain error: {0}")]
    Domain(String),

    /// A mathematical precondition of the operation does not hold for these
    /// arguments (e.g. a primitivity hypothesis fails).
    #[error("precondition not satisfied: {0}")]
    Precondition(String),

    /// The arguments are valid but fall in a case the operation does not
    /// cover.
    #[error("unsupported case: {0}")]
    Unsupported(String),

    /// A configured resource limit (such as the closure cap) was exceeded.
    #[error("resource limit exceeded: {0}")]
    Resource(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn unsupported(msg: impl Into<String>) -> Self {
        Error::Unsupported(msg.into())
    }

    pub(crate) fn resource(msg: impl Into<String>) -> Self {
        Error::Resource(msg.into())
    }
}
