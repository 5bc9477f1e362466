use num_complex::Complex64;
use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("polynomial has all coefficients zero")]
    AllCoefficientsZero,
    #[error("root iteration did not converge (best residual {residual:.3e})")]
    NonConvergence {
        roots: Vec<Complex64>,
        residual: f64,
    },
    #[error("index {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("binomial ({n}, {k}) outside the supported range")]
    Overflow { n: usize, k: usize },
    #[error("polynomial ambient {ambient} exceeds the requested degree {n}")]
    AmbientExceeded { ambient: usize, n: usize },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("map must be monic with exact degree at least 1")]
    NonMonicMap,
    #[error("no closed form for map degree {d} with n = {n}")]
    UnsupportedShape { d: usize, n: usize },
    #[error("matrix is not Hermitian")]
    NotHermitian,
    #[error("domain has a degenerate boundary")]
    DegenerateBoundary,
    #[error("map degree {d} is odd; the conjugation symmetry requires even degree")]
    OddDegreeMap { d: usize },
    #[error("operator is numerically singular")]
    SingularT,
    #[error("Jacobi sweeps failed to reduce the off-diagonal mass")]
    EigenNonConvergence,
    #[error("the full-fiber region is empty (up to scan resolution)")]
    EmptyRegion,
    #[error("hypothesis check failed: {0}")]
    HypothesisFailed(String),
    #[error("not a valid circular domain: the form never changes sign")]
    InvalidDomain,
}

pub type Result<T> = std::result::Result<T, Error>;
