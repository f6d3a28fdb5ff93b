//! Numerical toolkit for the periodic hyperelastic rod equation
//! `u_t + γ u u_x = -∂_x p∗((3-γ)/2 u² + γ/2 u_x²)`.
//!
//! The crate computes the variational quantities behind the local-in-space
//! wave-breaking criteria of the rod equation: the two-parameter infimum
//! I(α,β), weighted Poincaré constants, the slope thresholds β_γ together
//! with their critical γ constants and analytic upper bounds, and it checks
//! the criteria on user-supplied initial data, both analytically and against
//! a direct pseudo-spectral simulation of the PDE.

pub mod criteria;
pub mod grid;
pub mod kernel;
pub mod legendre;
pub mod report;
pub mod simulator;
pub mod threshold;
pub mod variational;

use thiserror::Error;

/// `(e+1)/(e-1)`, the admissibility limit for the weight parameter β.
pub fn beta_limit() -> f64 {
    (std::f64::consts::E + 1.0) / (std::f64::consts::E - 1.0)
}

#[derive(Debug, Error)]
pub enum RodError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("internal failure: {0}")]
    Internal(String),
}

impl RodError {
    pub fn domain(msg: impl Into<String>) -> Self {
        RodError::Domain(msg.into())
    }
    pub fn internal(msg: impl Into<String>) -> Self {
        RodError::Internal(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, RodError>;
