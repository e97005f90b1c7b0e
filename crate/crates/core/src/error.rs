use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("argument out of domain: {0}")]
    Domain(String),

    #[error("invalid tolerance {0:e}: must be positive and finite")]
    InvalidTolerance(f64),

    #[error("sign certification needs more than degree {budget} (tolerance {tol:e} too tight)")]
    ToleranceTooTight { tol: f64, budget: usize },

    #[error("certification failed: {0}")]
    Certification(String),

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("step {0:e} exceeds the maximum RK4 step of 1e-2")]
    StepTooLarge(f64),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_tol(tol: f64) -> Result<()> {
    if tol > 0.0 && tol.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidTolerance(tol))
    }
}
