use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// An argument lies outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Model parameters violate a construction invariant.
    #[error("invalid model: {0}")]
    Model(String),

    /// A quantum number beyond the bound-state range.
    #[error("state index {n} out of range: the model has {count} bound state(s)")]
    IndexOutOfRange { n: usize, count: usize },

    /// An iterative oracle exhausted its budget.
    #[error("convergence failure: {0}")]
    Convergence(String),

    /// An internal invariant was breached; indicates a bug upstream.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
