use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("invalid degree {0}: must lie in 1..={max}", max = crate::perm::MAX_DEGREE)]
    InvalidDegree(usize),

    #[error("{message} (at `{token}`)")]
    Parse { token: String, message: String },

    #[error("image list is not a bijection: {0}")]
    NotBijection(String),

    #[error("parameter out of range: {0}")]
    Domain(String),

    #[error("unsupported parameter: {0}")]
    Unsupported(String),

    #[error("resource budget exceeded: {0}")]
    Budget(String),

    #[error("duplicate element {0}")]
    Duplicate(String),

    #[error("set is not independent: {0} and {1} are adjacent")]
    NotIndependent(String, String),

    #[error("parity precondition violated by {0}")]
    Parity(String),

    #[error("invalid DIMACS input at line {line}: {message}")]
    Dimacs { line: usize, message: String },

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(token: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            token: token.into(),
            message: message.into(),
        }
    }

    /// True for errors caused by a configured resource limit.
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::Budget(_))
    }
}
