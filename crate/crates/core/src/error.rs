use thiserror::Error;

/// Errors raised by the numerical routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("ball violation: norm {norm} exceeds 1 - {eps}")]
    BallViolation { norm: f64, eps: f64 },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("dimension must be at least 1")]
    EmptyVector,

    #[error("non-finite component at index {index}")]
    NonFinite { index: usize },

    #[error("degenerate direction: the zero vector has no canonical frame")]
    DegenerateDirection,

    #[error("n must be ≥ 3 (got {n})")]
    MobiusDimension { n: usize },

    #[error("matrix is not positive semidefinite (min eigenvalue {min_eigenvalue})")]
    NotPositiveSemidefinite { min_eigenvalue: f64 },

    #[error("matrix is not symmetric (entry ({row}, {col}) differs from its transpose)")]
    NotSymmetric { row: usize, col: usize },

    #[error("matrix data has length {len}, expected {expected}")]
    Shape { len: usize, expected: usize },

    #[error("Jacobi eigensolver did not converge after {sweeps} sweeps")]
    NoConvergence { sweeps: usize },

    #[error("matrix is not the boost generated by the given vector (max deviation {deviation})")]
    NotABoost { deviation: f64 },
}

impl Error {
    /// Stable machine-readable identifier for the error kind.
    pub fn code(&self) -> &'static str {
        match self {
            Error::BallViolation { .. } => "ball_violation",
            Error::DimensionMismatch { .. } => "dimension_mismatch",
            Error::EmptyVector => "empty_vector",
            Error::NonFinite { .. } => "non_finite",
            Error::DegenerateDirection => "degenerate_direction",
            Error::MobiusDimension { .. } => "mobius_dimension",
            Error::NotPositiveSemidefinite { .. } => "not_psd",
            Error::NotSymmetric { .. } => "not_symmetric",
            Error::Shape { .. } => "shape",
            Error::NoConvergence { .. } => "no_convergence",
            Error::NotABoost { .. } => "not_a_boost",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
