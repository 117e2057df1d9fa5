use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed input or a violated call contract.
    #[error("usage error: {0}")]
    Usage(String),
    /// Input outside the mathematical domain of an operation
    /// (divergent product, singular parameter, ...).
    #[error("domain error: {0}")]
    Domain(String),
    /// An identity check failed; carries the first counterexample found.
    #[error("identity check failed: {0}")]
    CheckFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
