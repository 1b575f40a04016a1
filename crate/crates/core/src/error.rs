use thiserror::Error;

/// Errors raised by constructors, predicates and solvers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The input violates a precondition of the operation.
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// The inputs are valid but the requested object degenerates into something else.
    #[error("degenerate result: {0}")]
    Degenerate(String),
    /// The defining equations have no real solution.
    #[error("no solution: {0}")]
    NoSolution(String),
    /// A numeric classification could not separate its candidates.
    #[error("indeterminate: {reason} (candidates: {candidates})")]
    Indeterminate { reason: String, candidates: String },
    /// An enumeration hit its result cap.
    #[error("cap of {cap} exceeded after {found} results")]
    CapExceeded { cap: usize, found: usize },
    /// The input is larger than the guarded search size.
    #[error("input too large: {size} > {limit}")]
    TooLarge { size: usize, limit: usize },
    /// Text could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidInput(msg.into()))
}
