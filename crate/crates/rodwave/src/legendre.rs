//! Legendre functions of the first kind with complex degree, evaluated
//! through the hypergeometric series, and the critical zero α₀ of
//! `α ↦ P_{ν(α)}(cosh 1)`.
//!
//! Gamma-function ratios are never formed directly; the coefficients of the
//! series are generated by the term-ratio recurrence
//! `t_{k+1} = t_k (k-ν)(k+ν+1)/(k+1)² · (1-z)/2`, which is entire in ν.

use crate::{Result, RodError};
use num_complex::Complex64;

const REL_TAIL: f64 = 1e-14;
const MAX_TERMS: usize = 500;
const IMAG_TOL: f64 = 1e-10;

/// The complex degree `ν(α) = -1/2 + (1/2)√(1+4α)`, root taken in the closed
/// upper half-plane. Satisfies `ν(ν+1) = α`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexDegree {
    pub alpha: f64,
    pub nu: Complex64,
}

impl ComplexDegree {
    pub fn new(alpha: f64) -> Self {
        let mut root = Complex64::new(1.0 + 4.0 * alpha, 0.0).sqrt();
        if root.im < 0.0 {
            root = -root;
        }
        ComplexDegree {
            alpha,
            nu: Complex64::new(-0.5, 0.0) + 0.5 * root,
        }
    }

    pub fn integer(nu: f64) -> Self {
        ComplexDegree {
            alpha: nu * (nu + 1.0),
            nu: Complex64::new(nu, 0.0),
        }
    }
}

/// `μ(α) = (1/2)√(1+4α)` in the closed upper half-plane.
pub fn complex_mu(alpha: f64) -> Complex64 {
    let mut root = Complex64::new(1.0 + 4.0 * alpha, 0.0).sqrt();
    if root.im < 0.0 {
        root = -root;
    }
    0.5 * root
}

fn check_convergence(z: f64) -> Result<f64> {
    let w = (1.0 - z) / 2.0;
    if w.abs() >= 1.0 {
        return Err(RodError::domain(format!(
            "z = {z} outside the convergence disc |1/2 - z/2| < 1"
        )));
    }
    Ok(w)
}

fn take_real(value: Complex64, scale: f64, what: &str) -> Result<f64> {
    if value.im.abs() > IMAG_TOL * scale.max(1.0) {
        return Err(RodError::internal(format!(
            "{what}: imaginary part {} not negligible",
            value.im
        )));
    }
    Ok(value.re)
}

/// `P_ν(z)` by the hypergeometric series, for `|1/2 - z/2| < 1`.
pub fn legendre_p(deg: ComplexDegree, z: f64) -> Result<f64> {
    let w = check_convergence(z)?;
    let nu = deg.nu;
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    for k in 0..MAX_TERMS {
        let kf = k as f64;
        term *= (kf - nu) * (kf + nu + 1.0) / ((kf + 1.0) * (kf + 1.0)) * w;
        sum += term;
        if term.norm() < REL_TAIL * sum.norm() {
            break;
        }
    }
    take_real(sum, sum.norm(), "legendre_p")
}

/// `dP_ν/dz` by termwise differentiation of the series.
pub fn legendre_p_dz(deg: ComplexDegree, z: f64) -> Result<f64> {
    let w = check_convergence(z)?;
    let nu = deg.nu;
    // c_k w^k tracked by recurrence; derivative term is -c_k k w^{k-1}/2
    let mut cw = Complex64::new(1.0, 0.0);
    let mut sum = Complex64::new(0.0, 0.0);
    for k in 1..MAX_TERMS {
        let km = (k - 1) as f64;
        cw *= (km - nu) * (km + nu + 1.0) / (k as f64 * k as f64) * w;
        let term = if w == 0.0 {
            if k == 1 {
                -0.5 * (0.0 - nu) * (0.0 + nu + 1.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        } else {
            cw * (k as f64) / w * (-0.5)
        };
        sum += term;
        if k > 2 && term.norm() < REL_TAIL * sum.norm().max(1e-300) {
            break;
        }
    }
    take_real(sum, sum.norm(), "legendre_p_dz")
}

/// Value of `α ↦ P_{ν(α)}(cosh 1)`, the function whose largest zero is α₀.
pub fn critical_function(alpha: f64) -> f64 {
    legendre_p(ComplexDegree::new(alpha), 1f64.cosh()).expect("cosh 1 is inside the disc")
}

/// Largest zero α₀ of `α ↦ P_{ν(α)}(cosh 1)`, located by a coarse scan on
/// `[-10, 0]` followed by bisection/Newton refinement.
pub fn find_alpha0() -> f64 {
    let (mut lo, mut hi) = bracket_largest_zero().expect("alpha0 bracket on [-10, 0]");
    let mut x = 0.5 * (lo + hi);
    for _ in 0..200 {
        let fx = critical_function(x);
        if fx.abs() < 1e-13 {
            break;
        }
        // Newton step with a central-difference derivative in alpha
        let h = 1e-6;
        let d = (critical_function(x + h) - critical_function(x - h)) / (2.0 * h);
        let newton = x - fx / d;
        if critical_function(lo) * fx < 0.0 {
            hi = x;
        } else {
            lo = x;
        }
        x = if newton > lo && newton < hi {
            newton
        } else {
            0.5 * (lo + hi)
        };
        if hi - lo < 1e-14 {
            break;
        }
    }
    x
}

fn bracket_largest_zero() -> Result<(f64, f64)> {
    let step = 0.05;
    let mut x = 0.0;
    let mut fx = critical_function(x);
    while x > -10.0 {
        let xn = x - step;
        let fn_ = critical_function(xn);
        if fx * fn_ < 0.0 {
            return Ok((xn, x));
        }
        x = xn;
        fx = fn_;
    }
    Err(RodError::internal("failed to bracket alpha0 on [-10, 0]"))
}
