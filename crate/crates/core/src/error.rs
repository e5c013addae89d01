use thiserror::Error;

/// Library-wide error type.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Input outside the validity region of a formula.
    #[error("domain error: {0}")]
    Domain(String),

    /// Input sits exactly on a parameter boundary that has its own
    /// dedicated branch; the general-branch formulas are singular there.
    #[error("boundary branch required: {0}")]
    Branch(String),

    /// A value left the representable range of f64.
    #[error("overflow: {0}")]
    Overflow(String),

    /// A truncated expansion left more than the allowed mass in its tail.
    #[error("truncation tail {tail:.3e} exceeds budget in {context}")]
    Truncation { tail: f64, context: String },

    /// An iterative solve did not reach its target.
    #[error("convergence failure in {context} (estimate {estimate:.3e})")]
    Convergence { estimate: f64, context: String },
}

pub type Result<T> = std::result::Result<T, Error>;
