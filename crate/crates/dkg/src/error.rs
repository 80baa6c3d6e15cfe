use thiserror::Error;

pub type Result<T> = std::result::Result<T, DkgError>;

#[derive(Debug, Clone, Error)]
pub enum DkgError {
    /// Input outside the domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Coupling at or beyond the critical value: the Bargmann index would be
    /// complex and no bound state exists for the requested mode.
    #[error(
        "supercritical coupling: gamma = {gamma} >= critical value {critical} for this mode"
    )]
    Supercritical { gamma: f64, critical: f64 },

    /// Quadrature failed to reach the requested tolerance.
    #[error("accuracy error: requested {requested:e}, achieved {achieved:e}")]
    Accuracy { requested: f64, achieved: f64 },

    /// Angular mode violating the sector/ell integrality constraint.
    #[error("invalid angular mode: {0}")]
    InvalidMode(String),

    /// A radial operator was applied to a function outside its family.
    #[error("radial family mismatch: {0}")]
    FamilyMismatch(String),
}

impl DkgError {
    pub fn domain(msg: impl Into<String>) -> Self {
        DkgError::Domain(msg.into())
    }

    pub fn invalid_mode(msg: impl Into<String>) -> Self {
        DkgError::InvalidMode(msg.into())
    }

    pub fn family(msg: impl Into<String>) -> Self {
        DkgError::FamilyMismatch(msg.into())
    }
}
