use thiserror::Error;

/// Hard failures: malformed input, violated preconditions, I/O.
///
/// Semantic findings (an improper coloring, a dataset violation, a placement
/// breaking a constraint) are *not* errors; they travel in
/// [`crate::report::ValidationReport`] values so callers can render them.
#[derive(Debug, Error)]
pub enum Error {
    /// Input could not be parsed or refers to objects that do not exist.
    #[error("invalid input: {0}")]
    Input(String),
    /// A documented precondition of an operation does not hold.
    #[error("precondition failed: {0}")]
    Precondition(String),
    /// A structural guarantee the library relies on turned out false.
    #[error("internal invariant broken: {0}")]
    Internal(String),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}
