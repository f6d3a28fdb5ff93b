//! Uniform periodic grids and the spectral operations shared by the
//! convolution evaluators and the PDE simulator.
//!
//! A [`GridFunction`] stores samples of a 1-periodic function at the nodes
//! `x_j = j/N`, with `N` a power of two. Derivatives and convolutions with
//! the Green kernel are Fourier-multiplier operations.

use crate::{Result, RodError};
use num_complex::Complex64;
use rustfft::FftPlanner;
use std::f64::consts::PI;

/// Samples of a 1-periodic real function on the uniform grid `x_j = j/N`.
#[derive(Debug, Clone, PartialEq)]
pub struct GridFunction {
    values: Vec<f64>,
}

impl GridFunction {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        let n = values.len();
        if n < 8 || !n.is_power_of_two() {
            return Err(RodError::domain(format!(
                "grid size must be a power of two >= 8, got {n}"
            )));
        }
        Ok(GridFunction { values })
    }

    pub fn from_fn(n: usize, f: impl Fn(f64) -> f64) -> Result<Self> {
        Self::new((0..n).map(|j| f(j as f64 / n as f64)).collect())
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn node(&self, j: usize) -> f64 {
        j as f64 / self.len() as f64
    }

    /// Forward DFT, unnormalized (coefficient `k` multiplies `e^{2πikx}/N`).
    pub fn fft(&self) -> Vec<Complex64> {
        let mut buf: Vec<Complex64> = self.values.iter().map(|&v| Complex64::new(v, 0.0)).collect();
        fft_in_place(&mut buf, false);
        buf
    }

    pub fn from_spectrum(spectrum: &[Complex64]) -> Result<Self> {
        let n = spectrum.len();
        let mut buf = spectrum.to_vec();
        fft_in_place(&mut buf, true);
        Self::new(buf.iter().map(|c| c.re / n as f64).collect())
    }

    /// Spectral derivative.
    pub fn derivative(&self) -> Self {
        let n = self.len();
        let mut hat = self.fft();
        for (m, c) in hat.iter_mut().enumerate() {
            let k = wavenumber(m, n) as f64;
            *c *= Complex64::new(0.0, 2.0 * PI * k);
        }
        // Nyquist mode of a real signal has no well-defined odd derivative.
        hat[n / 2] = Complex64::new(0.0, 0.0);
        Self::from_spectrum(&hat).expect("same grid size")
    }

    /// Applies a Fourier multiplier `m(k)` given as a function of the signed
    /// integer wavenumber.
    pub fn apply_multiplier(&self, mult: impl Fn(i64) -> Complex64) -> Self {
        let n = self.len();
        let mut hat = self.fft();
        for (m, c) in hat.iter_mut().enumerate() {
            *c *= mult(wavenumber(m, n));
        }
        Self::from_spectrum(&hat).expect("same grid size")
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0f64, |a, &v| a.max(v.abs()))
    }

    pub fn min(&self) -> f64 {
        self.values.iter().fold(f64::INFINITY, |a, &v| a.min(v))
    }

    /// Evaluates the trigonometric interpolant at an arbitrary point.
    pub fn interp_spectral(&self, x: f64, hat: &[Complex64]) -> f64 {
        let n = self.len();
        let mut acc = Complex64::new(0.0, 0.0);
        for (m, c) in hat.iter().enumerate() {
            let k = wavenumber(m, n);
            if m == n / 2 {
                // split the Nyquist mode symmetrically
                acc += c * Complex64::new(0.0, 2.0 * PI * k as f64 * x).exp() * 0.5;
                acc += c * Complex64::new(0.0, -2.0 * PI * k as f64 * x).exp() * 0.5;
            } else {
                acc += c * Complex64::new(0.0, 2.0 * PI * k as f64 * x).exp();
            }
        }
        acc.re / n as f64
    }
}

/// Signed wavenumber of DFT bin `m` on a grid of size `n`.
pub fn wavenumber(m: usize, n: usize) -> i64 {
    if m <= n / 2 {
        m as i64
    } else {
        m as i64 - n as i64
    }
}

pub fn fft_in_place(buf: &mut [Complex64], inverse: bool) {
    let mut planner = FftPlanner::<f64>::new();
    let fft = if inverse {
        planner.plan_fft_inverse(buf.len())
    } else {
        planner.plan_fft_forward(buf.len())
    };
    fft.process(buf);
}

/// Composite Simpson quadrature of `f` over `[a, b]` on `2^k` panels.
pub fn simpson(f: impl Fn(f64) -> f64, a: f64, b: f64, panels: usize) -> f64 {
    assert!(panels >= 2 && panels % 2 == 0);
    let h = (b - a) / panels as f64;
    let mut s = f(a) + f(b);
    for i in 1..panels {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        s += w * f(a + i as f64 * h);
    }
    s * h / 3.0
}
