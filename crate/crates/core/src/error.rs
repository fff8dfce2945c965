//! Error types shared across the crate.

use thiserror::Error;

/// Errors produced by grid construction, solvers, and diagnostics.
#[derive(Debug, Error)]
pub enum Error {
    /// Grid construction rejected (n < 3, non-positive extent, ...).
    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    /// A physical or numerical parameter is out of range.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// The requested operation is only defined for a subset of models
    /// (e.g. equal cubic coefficients) that the given parameters violate.
    #[error("unsupported model: {0}")]
    UnsupportedModel(String),

    /// The mass bound is finite only in the oscillatory regime gamma < kappa.
    #[error("no finite mass bound: gain/loss rate is not below the coupling")]
    NoFiniteBound,

    /// The single-component reduction v = e^{i delta} u needs gamma < kappa.
    #[error("reduction undefined: gain/loss rate is not below the coupling")]
    ReductionUndefined,

    /// The 2D existence classifier only applies for gamma < kappa.
    #[error("classifier out of scope: gain/loss rate is not below the coupling")]
    OutOfTheoremScope,

    /// An implicit solve diverged or produced non-finite fields.
    #[error("solver failure: {0}")]
    SolverFailure(String),

    /// Malformed input to a post-processing routine.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// File I/O failure.
    #[error(transparent)]
    Io(#[from] std::io::Error),

    /// Malformed text data (snapshot files, config fragments).
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
