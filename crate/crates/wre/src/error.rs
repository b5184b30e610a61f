use thiserror::Error;

/// Error taxonomy shared by every module.
///
/// `Parameter` marks inputs that violate a documented precondition,
/// `Domain` marks analytically undefined evaluations (for example a
/// closed form whose logarithm argument is not positive), `Degenerate`
/// marks inputs whose output would be meaningless (an all-zero matrix,
/// a vanishing second eigenvalue), and `Contract` marks data that fails
/// a structural invariant such as hermiticity or unit trace.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parameter error: {0}")]
    Parameter(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("contract violation: {0}")]
    Contract(String),
    #[error("numerical failure: {0}")]
    Numerical(String),
}

pub type Result<T> = std::result::Result<T, Error>;
