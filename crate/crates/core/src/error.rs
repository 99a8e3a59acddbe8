use thiserror::Error;

/// Errors surfaced by the toolkit.
///
/// Numerical refusals (pole proximity, singular Gram matrices) are kept
/// distinct from plain usage errors so callers can route them: a singular
/// `Lambda` is the counterexample signal, not a bug.
#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not square: {rows}x{cols}")]
    NonSquare { rows: usize, cols: usize },

    #[error("matrix is empty")]
    EmptyMatrix,

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("Hermitian deviation {dev:.3e} exceeds tolerance {tol:.3e}")]
    NotHermitian { dev: f64, tol: f64 },

    #[error("singular system: rank {rank} below dimension {dim}")]
    SingularSystem { rank: usize, dim: usize },

    #[error("argument out of supported range: {0}")]
    OutOfRange(String),

    #[error("spectral point too close to sigma(A0): distance {dist:.3e}, threshold {threshold:.3e}")]
    PoleProximity { dist: f64, threshold: f64 },

    #[error("Lambda = Im M(i) is numerically singular: smallest eigenvalue {min_eig:.3e}")]
    LambdaSingular { min_eig: f64 },

    #[error("eta = {eta} lies in (or too close to) the spectrum of {operator}")]
    EtaInSpectrum { eta: f64, operator: &'static str },

    #[error("relation is not self-adjoint (symmetric residual {residual:.3e})")]
    NotSelfAdjoint { residual: f64 },

    #[error("middle factor (theta - M(lambda)) is singular: lambda is not a resolvent point")]
    SingularMiddleFactor,

    #[error("decomposition f = f0 + f_eta failed: {0}")]
    DecompositionFailed(String),

    #[error("domain/range inclusion violated: {0}")]
    InclusionViolated(String),

    #[error("quadrature mismatch: rule has {nodes} nodes, got {samples} samples")]
    QuadratureMismatch { nodes: usize, samples: usize },

    #[error("too few active modes for a decay fit: {0}")]
    TooFewModes(usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("serialization error: {0}")]
    Serde(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
