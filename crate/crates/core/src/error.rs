use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("domain error: {0}")]
    Domain(String),

    /// A theorem hypothesis is violated by the input.
    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("prime table covers only p <= {limit}, but {needed} is required")]
    SieveTooSmall { limit: u64, needed: u64 },
}

impl Error {
    pub(crate) fn dimension(n: u64) -> Self {
        Error::Precondition(format!(
            "the bound requires dimension n >= 3 (got n = {n})"
        ))
    }
}
