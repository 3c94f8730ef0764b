use thiserror::Error;

/// Errors raised by the solver and its geometry kernel.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("polygon is not convex")]
    NonConvex,
    #[error("invalid polygon: {0}")]
    InvalidPolygon(&'static str),
    #[error("invalid Wulff polygon: {0}")]
    InvalidNorm(&'static str),
    #[error("domain has zero area")]
    DegenerateDomain,
    #[error("mass {0} is outside the admissible range")]
    MassOutOfRange(f64),
    #[error("invalid argument: {0}")]
    InvalidArgument(&'static str),
    #[error("internal invariant violated: {0}")]
    InvariantViolation(&'static str),
}

pub type Result<T> = core::result::Result<T, Error>;
