use thiserror::Error;

/// Errors produced by the norm engines and their supporting machinery.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not Hermitian (max deviation {max_dev:.3e} exceeds tolerance {tol:.3e})")]
    NotHermitian { max_dev: f64, tol: f64 },

    #[error("Jacobi eigensolver failed to converge within {sweeps} sweeps")]
    NoConvergence { sweeps: u32 },

    #[error("trace word must be nonempty")]
    EmptyWord,

    #[error("out of range: {0}")]
    OutOfRange(String),

    #[error("moment of order {order} does not exist (Pareto requires alpha > order, got alpha = {alpha})")]
    MomentDoesNotExist { alpha: f64, order: u32 },

    #[error("moment generating function unavailable for {0}")]
    MgfUnavailable(String),

    #[error("exponent d = {d} is not an even integer >= 2")]
    OddExponent { d: f64 },

    #[error("{n} samples requested, at least {min} required")]
    TooFewSamples { n: u64, min: u64 },

    #[error("alpha = {alpha} too small, need alpha > {min}")]
    AlphaTooSmall { alpha: f64, min: f64 },

    #[error("vector lengths differ: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("x is not majorized by y")]
    NotMajorized,

    #[error("no perfect matching on positive entries; matrix is not doubly stochastic")]
    NoPerfectMatching,

    #[error("dimensions differ: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
