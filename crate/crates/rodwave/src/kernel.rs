//! The periodic Green kernel `p` of `(1-∂²_x)^{-1}`, its derivative, and the
//! weight `ω = p + β p'` used throughout the variational computations.
//!
//! `p(x) = cosh(x - ⌊x⌋ - 1/2) / (2 sinh(1/2))` is continuous and 1-periodic;
//! `p'` has a jump at the integers and is left undefined there.

use crate::grid::GridFunction;
use crate::{beta_limit, Result, RodError};
use num_complex::Complex64;
use std::f64::consts::PI;

/// Value of the periodic kernel `p` at any real `x`.
pub fn eval_p(x: f64) -> f64 {
    let frac = x - x.floor();
    (frac - 0.5).cosh() / (2.0 * 0.5f64.sinh())
}

/// Pointwise derivative `p'(x) = sinh(x - ⌊x⌋ - 1/2) / (2 sinh(1/2))`,
/// undefined at the lattice points where `p'` jumps.
pub fn eval_p_prime(x: f64) -> Result<f64> {
    if x == x.floor() {
        return Err(RodError::domain("derivative undefined at lattice points"));
    }
    let frac = x - x.floor();
    Ok((frac - 0.5).sinh() / (2.0 * 0.5f64.sinh()))
}

/// One-sided limit of `p'` from the right at an integer point.
pub fn p_prime_right_limit() -> f64 {
    -0.5
}

/// A weight parameter β together with its admissibility status.
///
/// The weight `ω = p + β p'` is nonnegative on `(0,1)` exactly when
/// `|β| <= (e+1)/(e-1)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeightSpec {
    beta: f64,
}

impl WeightSpec {
    pub fn new(beta: f64) -> Self {
        WeightSpec { beta }
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn admissible(&self) -> bool {
        self.beta.abs() <= beta_limit() + 1e-14
    }

    /// `ω(x) = p(x) + β p'(x)` for `x` in the open interval `(0,1)`.
    pub fn eval(&self, x: f64) -> Result<f64> {
        if !self.admissible() {
            return Err(RodError::domain("weight changes sign"));
        }
        if !(0.0 < x && x < 1.0) {
            return Err(RodError::domain("weight evaluated outside (0,1)"));
        }
        Ok(self.eval_unchecked(x))
    }

    /// Closed form on `(0,1)`: `[(1+β)e^x + (1-β)e^{1-x}] / (2(e-1))`.
    pub fn eval_unchecked(&self, x: f64) -> f64 {
        let e = std::f64::consts::E;
        ((1.0 + self.beta) * x.exp() + (1.0 - self.beta) * (1.0 - x).exp()) / (2.0 * (e - 1.0))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KernelChoice {
    P,
    PPrime,
}

/// Periodic convolution `p∗f` or `p'∗f`, evaluated spectrally.
///
/// The Fourier multiplier of `p` is `1/(1+4π²k²)`; for `p'` it is composed
/// with the derivative multiplier `2πik`. Exact for band-limited `f`.
pub fn convolve_periodic(f: &GridFunction, kernel: KernelChoice) -> GridFunction {
    f.apply_multiplier(|k| {
        let kk = 2.0 * PI * k as f64;
        let p_mult = 1.0 / (1.0 + kk * kk);
        match kernel {
            KernelChoice::P => Complex64::new(p_mult, 0.0),
            KernelChoice::PPrime => Complex64::new(0.0, kk * p_mult),
        }
    })
}
