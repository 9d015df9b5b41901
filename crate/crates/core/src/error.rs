use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A structure failed its construction-time law check.
    #[error("validation error: {0}")]
    Validation(String),
    #[error("lookup error: {0}")]
    Lookup(String),
    /// The base category has a non-identity endomorphism cycle, so the
    /// resolution has infinitely many simplices in some degree.
    #[error("unsupported category: {0}")]
    UnsupportedCategory(String),
    #[error("operator error: {0}")]
    Operator(String),
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("rejected: {0}")]
    Rejected(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn parse(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse { location: location.into(), message: message.into() }
    }
}
