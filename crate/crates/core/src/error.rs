use crate::quadrature::QuadratureError;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Argument outside the region where the requested method is valid.
    #[error("domain error: {0}")]
    Domain(String),

    /// Argument on the cut along the negative real axis (including 0).
    #[error("argument {re}{im:+}i lies on the branch cut along the non-positive real axis")]
    BranchCut { re: f64, im: f64 },

    #[error("non-finite input: {0}")]
    NonFinite(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("susceptibility has a pole at {re}{im:+}i")]
    Pole { re: f64, im: f64 },

    /// Asymptotic series asked for more terms than the optimal truncation allows.
    #[error("asymptotic series diverges at {n_terms} terms for |z| = {modulus}; use fewer terms or another method")]
    DivergentSeries { n_terms: usize, modulus: f64 },

    /// A physically divergent quantity was requested.
    #[error("divergent quantity: {0}")]
    Divergent(String),

    #[error("finite-difference step underflow at theta = {theta}; use the low-temperature series")]
    StepUnderflow { theta: f64 },

    #[error("numerical failure: {0}")]
    Numerical(String),

    #[error(transparent)]
    Quadrature(#[from] QuadratureError),
}
