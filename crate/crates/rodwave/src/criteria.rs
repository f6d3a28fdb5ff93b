//! The local-in-space blowup criterion `u₀'(x₀) < -β_γ|u₀(x₀)|` (sign-flipped
//! for γ < 0) on the circle and on the line, the T* bound, the f–g
//! comparison-lemma harness, unique-continuation monotonicity checks, and the
//! decay-based blowup test for line data.

use crate::grid::GridFunction;
use crate::threshold::{beta_gamma_nonperiodic, compute_beta_gamma, BetaGamma};
use crate::{Result, RodError};
use num_complex::Complex64;
use statrs::function::erf::erfc;
use std::f64::consts::PI;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpatialDomain {
    Circle,
    Line,
}

type Evaluator = Box<dyn Fn(f64) -> f64 + Send + Sync>;

/// An initial datum with analytic (or spectrally interpolated) evaluators for
/// `u₀` and `u₀'`.
pub struct InitialDatum {
    domain: SpatialDomain,
    label: String,
    u: Evaluator,
    ux: Evaluator,
}

impl InitialDatum {
    pub fn domain(&self) -> SpatialDomain {
        self.domain
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn u(&self, x: f64) -> f64 {
        (self.u)(x)
    }

    pub fn ux(&self, x: f64) -> f64 {
        (self.ux)(x)
    }

    /// `a·sin(2πkx) + c` on the circle.
    pub fn sine(a: f64, k: u32, c: f64) -> Self {
        let om = 2.0 * PI * k as f64;
        InitialDatum {
            domain: SpatialDomain::Circle,
            label: format!("sine(a={a},k={k},c={c})"),
            u: Box::new(move |x| a * (om * x).sin() + c),
            ux: Box::new(move |x| a * om * (om * x).cos()),
        }
    }

    pub fn constant(c: f64) -> Self {
        InitialDatum {
            domain: SpatialDomain::Circle,
            label: format!("constant({c})"),
            u: Box::new(move |_| c),
            ux: Box::new(|_| 0.0),
        }
    }

    /// `a·exp(-((x-x0)/w)²)` on the line.
    pub fn gaussian(a: f64, x0: f64, w: f64) -> Self {
        InitialDatum {
            domain: SpatialDomain::Line,
            label: format!("gaussian(a={a},x0={x0},w={w})"),
            u: Box::new(move |x| {
                let s = (x - x0) / w;
                a * (-s * s).exp()
            }),
            ux: Box::new(move |x| {
                let s = (x - x0) / w;
                -2.0 * s / w * a * (-s * s).exp()
            }),
        }
    }

    /// `amp · (e^{-|·|}/2) ∗ N(0,ε²)` on the line, in closed form via erfc.
    /// The Gaussian terms of the derivative cancel exactly, leaving
    /// `u' = amp·e^{ε²/2}/4·(e^x erfc((x+ε²)/(ε√2)) - e^{-x} erfc((ε²-x)/(ε√2)))`.
    pub fn peakon_smoothed_line(amp: f64, eps: f64) -> Self {
        let pre = amp * (eps * eps / 2.0).exp() / 4.0;
        let s2e = std::f64::consts::SQRT_2 * eps;
        let plus = move |x: f64| x.exp() * erfc((x + eps * eps) / s2e);
        let minus = move |x: f64| (-x).exp() * erfc((eps * eps - x) / s2e);
        InitialDatum {
            domain: SpatialDomain::Line,
            label: format!("peakon-smoothed(amp={amp},eps={eps})"),
            u: Box::new(move |x| pre * (minus(x) + plus(x))),
            ux: Box::new(move |x| pre * (plus(x) - minus(x))),
        }
    }

    /// `amp · p ∗ (periodized Gaussian mollifier)` on the circle, summed in
    /// Fourier space.
    pub fn peakon_smoothed_circle(amp: f64, eps: f64) -> Self {
        let mut mults = Vec::new();
        for k in 1..=10_000u32 {
            let kk = 2.0 * PI * k as f64;
            let m = (-0.5 * kk * kk * eps * eps).exp() / (1.0 + kk * kk);
            if m < 1e-17 {
                break;
            }
            mults.push((kk, m));
        }
        let mults2 = mults.clone();
        InitialDatum {
            domain: SpatialDomain::Circle,
            label: format!("peakon-smoothed-circle(amp={amp},eps={eps})"),
            u: Box::new(move |x| {
                amp * (1.0 + 2.0 * mults.iter().map(|&(kk, m)| m * (kk * x).cos()).sum::<f64>())
            }),
            ux: Box::new(move |x| {
                -2.0 * amp * mults2.iter().map(|&(kk, m)| m * kk * (kk * x).sin()).sum::<f64>()
            }),
        }
    }

    /// One-sided Fourier coefficients `c_k`, `k = 0..`, of a real circle
    /// function `u = c₀ + 2Σ Re(c_k e^{2πikx})`.
    pub fn fourier(coeffs: Vec<Complex64>) -> Self {
        let c2 = coeffs.clone();
        InitialDatum {
            domain: SpatialDomain::Circle,
            label: format!("fourier({} modes)", coeffs.len()),
            u: Box::new(move |x| {
                let mut acc = 0.0;
                for (k, c) in coeffs.iter().enumerate() {
                    let phase = Complex64::new(0.0, 2.0 * PI * k as f64 * x).exp();
                    acc += if k == 0 { (c * phase).re } else { 2.0 * (c * phase).re };
                }
                acc
            }),
            ux: Box::new(move |x| {
                let mut acc = 0.0;
                for (k, c) in c2.iter().enumerate().skip(1) {
                    let kk = 2.0 * PI * k as f64;
                    let phase = Complex64::new(0.0, kk * x).exp();
                    acc += 2.0 * (Complex64::new(0.0, kk) * c * phase).re;
                }
                acc
            }),
        }
    }

    /// Grid samples on the circle with trigonometric-interpolant evaluators.
    /// Requires N ≥ 64 and flags insufficient spectral decay
    /// (`|û(k)| ≰ C·k⁻²` beyond the resolved low modes).
    pub fn samples(g: GridFunction) -> Result<Self> {
        if g.len() < 64 {
            return Err(RodError::domain("sampled datum requires N >= 64"));
        }
        let hat = g.fft();
        let n = g.len();
        // k⁻² decay check: |û(k)|k² must not grow from the resolved head
        // into the tail third of the spectrum
        let scale = hat.iter().map(|c| c.norm()).fold(0.0f64, f64::max);
        let weighted = |k: usize| hat[k].norm() * (k * k) as f64;
        let head = (1..=n / 3).map(weighted).fold(0.0f64, f64::max);
        let tail = (n / 3 + 1..=n / 2).map(weighted).fold(0.0f64, f64::max);
        if tail > head + 1e-10 * scale {
            return Err(RodError::domain(
                "sampled datum lacks H^s regularity: spectrum violates the k^-2 envelope",
            ));
        }
        let dhat: Vec<Complex64> = g.derivative().fft();
        let g2 = g.clone();
        let gd = g.derivative();
        InitialDatumBuilder {
            domain: SpatialDomain::Circle,
            label: format!("samples(N={n})"),
            u: Box::new(move |x| g2.interp_spectral(x, &hat)),
            ux: Box::new(move |x| gd.interp_spectral(x, &dhat)),
        }
        .build()
    }

    /// Arbitrary analytic line datum from closures (u, u').
    pub fn from_fns_line(
        label: impl Into<String>,
        u: impl Fn(f64) -> f64 + Send + Sync + 'static,
        ux: impl Fn(f64) -> f64 + Send + Sync + 'static,
    ) -> Self {
        InitialDatum {
            domain: SpatialDomain::Line,
            label: label.into(),
            u: Box::new(u),
            ux: Box::new(ux),
        }
    }

    /// Arbitrary analytic circle datum from closures (u, u'); caller is
    /// responsible for 1-periodicity.
    pub fn from_fns_circle(
        label: impl Into<String>,
        u: impl Fn(f64) -> f64 + Send + Sync + 'static,
        ux: impl Fn(f64) -> f64 + Send + Sync + 'static,
    ) -> Self {
        InitialDatum {
            domain: SpatialDomain::Circle,
            label: label.into(),
            u: Box::new(u),
            ux: Box::new(ux),
        }
    }
}

struct InitialDatumBuilder {
    domain: SpatialDomain,
    label: String,
    u: Evaluator,
    ux: Evaluator,
}

impl InitialDatumBuilder {
    fn build(self) -> Result<InitialDatum> {
        Ok(InitialDatum {
            domain: self.domain,
            label: self.label,
            u: self.u,
            ux: self.ux,
        })
    }
}

/// Margins within this distance of zero report "boundary — inconclusive":
/// the criteria are strict inequalities and the sharp line case shows that
/// equality does not imply blowup.
const BOUNDARY_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct BlowupVerdict {
    /// False when the threshold is +∞ (criterion void for this γ).
    pub applicable: bool,
    pub triggered: bool,
    pub boundary_inconclusive: bool,
    pub witness_x0: Option<f64>,
    /// `min_x u₀'(x) + β|u₀(x)|` (γ > 0; sign-flipped slope for γ < 0);
    /// +∞ when not applicable.
    pub margin: f64,
    pub tstar_bound: Option<f64>,
    /// The alternative γ = 3 display value `(2/3)√(-inf u₀')`, surfaced next
    /// to the general formula (the two disagree; see reports).
    pub tstar_gamma3_alt: Option<f64>,
    pub beta_used: f64,
}

impl BlowupVerdict {
    fn not_applicable() -> Self {
        BlowupVerdict {
            applicable: false,
            triggered: false,
            boundary_inconclusive: false,
            witness_x0: None,
            margin: f64::INFINITY,
            tstar_bound: None,
            tstar_gamma3_alt: None,
            beta_used: f64::INFINITY,
        }
    }
}

fn golden_min(f: &dyn Fn(f64) -> f64, mut a: f64, mut b: f64, tol: f64) -> (f64, f64) {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut x1 = b - inv_phi * (b - a);
    let mut x2 = a + inv_phi * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    while b - a > tol {
        if f1 > f2 {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        }
    }
    if f1 < f2 {
        (x1, f1)
    } else {
        (x2, f2)
    }
}

/// Shared scan: minimize the criterion margin and, when triggered, maximize
/// the T*-radicand `u'² - β²u²` over triggering points.
fn scan_criterion(
    datum: &InitialDatum,
    gamma: f64,
    beta: f64,
    window: (f64, f64),
    n: usize,
) -> BlowupVerdict {
    let sign = if gamma >= 0.0 { 1.0 } else { -1.0 };
    let m = |x: f64| sign * datum.ux(x) + beta * datum.u(x).abs();
    let (a, b) = window;
    let h = (b - a) / n as f64;
    let mut best = (a, m(a));
    for j in 1..=n {
        let x = a + j as f64 * h;
        let v = m(x);
        if v < best.1 {
            best = (x, v);
        }
    }
    let (x0, margin) = golden_min(&m, (best.0 - h).max(a), (best.0 + h).min(b), 1e-8);
    let (x0, margin) = if margin < best.1 { (x0, margin) } else { best };
    let triggered = margin < -BOUNDARY_TOL;
    let boundary = margin.abs() <= BOUNDARY_TOL;
    let mut tstar = None;
    let mut alt = None;
    if triggered {
        // tightest bound: maximize s = u'² - β²u² over triggering points
        let s = |x: f64| {
            let ux = datum.ux(x);
            let u = datum.u(x);
            ux * ux - beta * beta * u * u
        };
        let mut smax = (x0, s(x0));
        for j in 0..=n {
            let x = a + j as f64 * h;
            if m(x) < -BOUNDARY_TOL && s(x) > smax.1 {
                smax = (x, s(x));
            }
        }
        let (_, sval) = golden_min(&|x| -s(x), (smax.0 - h).max(a), (smax.0 + h).min(b), 1e-8);
        let sval = (-sval).max(smax.1);
        tstar = Some(2.0 / (gamma.abs() * sval.sqrt()));
        if (gamma - 3.0).abs() < 1e-12 {
            let min_slope = {
                let mut lo = f64::INFINITY;
                for j in 0..=n {
                    lo = lo.min(datum.ux(a + j as f64 * h));
                }
                let (_, v) = golden_min(&|x| datum.ux(x), a, b, 1e-8);
                lo.min(v)
            };
            alt = Some(2.0 / 3.0 * (-min_slope).max(0.0).sqrt());
        }
    }
    BlowupVerdict {
        applicable: true,
        triggered,
        boundary_inconclusive: boundary,
        witness_x0: if triggered || boundary { Some(x0) } else { None },
        margin,
        tstar_bound: tstar,
        tstar_gamma3_alt: alt,
        beta_used: beta,
    }
}

/// Theorem-1 check on the circle.
pub fn check_blowup_periodic(datum: &InitialDatum, gamma: f64) -> Result<BlowupVerdict> {
    if datum.domain != SpatialDomain::Circle {
        return Err(RodError::domain("periodic check requires a circle datum"));
    }
    let r = compute_beta_gamma(gamma)?;
    let beta = match r.beta_gamma {
        BetaGamma::Finite(b) => b,
        BetaGamma::Infinite => return Ok(BlowupVerdict::not_applicable()),
    };
    Ok(scan_criterion(datum, gamma, beta, (0.0, 1.0), 4096))
}

/// The non-periodic criterion on the line, with the closed-form threshold.
pub fn check_blowup_line(datum: &InitialDatum, gamma: f64) -> Result<BlowupVerdict> {
    if datum.domain != SpatialDomain::Line {
        return Err(RodError::domain("line check requires a line datum"));
    }
    let beta = match beta_gamma_nonperiodic(gamma) {
        BetaGamma::Finite(b) => b,
        BetaGamma::Infinite => return Ok(BlowupVerdict::not_applicable()),
    };
    // widen the window until the datum is negligible at the edges
    let mut half = 5.0f64;
    while half < 80.0 {
        let edge = datum.u(half).abs().max(datum.u(-half).abs())
            .max(datum.u(half - 0.5).abs())
            .max(datum.u(0.5 - half).abs());
        if edge < 1e-10 {
            break;
        }
        half *= 2.0;
    }
    let n = (4096.0 * (half / 5.0)).ceil() as usize;
    Ok(scan_criterion(datum, gamma, beta, (-half, half), n))
}

/// Integrates `f' = F(f,g), g' = G(f,g)` (with `F, G ≥ c·f·g` by contract)
/// by adaptive RK4 until `f + g > 10¹⁰`, and returns the observed divergence
/// time next to the lemma bound `1/(c√(f₀g₀))`.
pub fn comparison_lemma_harness(
    f0: f64,
    g0: f64,
    c: f64,
    rhs: impl Fn(f64, f64) -> (f64, f64),
) -> Result<(f64, f64)> {
    if f0 <= 0.0 || g0 <= 0.0 || c <= 0.0 {
        return Err(RodError::domain(
            "comparison lemma requires positive f0, g0, c",
        ));
    }
    let bound = 1.0 / (c * (f0 * g0).sqrt());
    let mut f = f0;
    let mut g = g0;
    let mut t = 0.0;
    for _ in 0..50_000_000u64 {
        if f + g > 1e10 {
            return Ok((t, bound));
        }
        if t > 3.0 * bound {
            return Err(RodError::internal(
                "no divergence before three times the lemma bound",
            ));
        }
        // local timescale 1/(c·max(f,g)): blowup-safe step control
        let dt = 0.01 / (1.0 / bound + c * f.max(g));
        let (k1f, k1g) = rhs(f, g);
        let (k2f, k2g) = rhs(f + 0.5 * dt * k1f, g + 0.5 * dt * k1g);
        let (k3f, k3g) = rhs(f + 0.5 * dt * k2f, g + 0.5 * dt * k2g);
        let (k4f, k4g) = rhs(f + dt * k3f, g + dt * k3g);
        f += dt / 6.0 * (k1f + 2.0 * k2f + 2.0 * k3f + k4f);
        g += dt / 6.0 * (k1g + 2.0 * k2g + 2.0 * k3g + k4g);
        t += dt;
        if !f.is_finite() || !g.is_finite() {
            return Ok((t, bound));
        }
    }
    Err(RodError::internal("comparison harness step cap exceeded"))
}

#[derive(Debug, Clone)]
pub struct ContinuationViolation {
    pub frame: usize,
    pub x: f64,
    /// +1 for a `u ≥ 0` interval, -1 for a `u ≤ 0` interval.
    pub interval_sign: i8,
}

#[derive(Debug, Clone)]
pub struct ContinuationReport {
    pub beta_used: f64,
    pub violations: Vec<ContinuationViolation>,
    /// Frames carrying an interior zero next to nonzero values: candidates
    /// for the "global ⇒ identically zero" contradiction.
    pub nontrivial_zero_frames: Vec<usize>,
}

/// Monotonicity test behind unique continuation: on every interval where a
/// frame keeps one sign, `e^{β_γ x}u` (u ≥ 0) resp. `e^{-β_γ x}u` (u ≤ 0)
/// must be nondecreasing for a global solution.
pub fn unique_continuation_check(
    frames: &[GridFunction],
    gamma: f64,
) -> Result<ContinuationReport> {
    let r = compute_beta_gamma(gamma)?;
    let beta = match r.beta_gamma {
        BetaGamma::Finite(b) => b,
        BetaGamma::Infinite => {
            return Err(RodError::domain(
                "unique continuation needs a finite threshold",
            ))
        }
    };
    let mut violations = Vec::new();
    let mut zero_frames = Vec::new();
    for (fi, frame) in frames.iter().enumerate() {
        let n = frame.len();
        let max = frame.max_abs();
        let tol = 1e-6 * max.max(1e-300);
        let v = frame.values();
        let has_zero = v.iter().any(|&x| x.abs() <= tol);
        if has_zero && max > 100.0 * tol {
            zero_frames.push(fi);
        }
        for j in 0..n - 1 {
            let (x1, x2) = (frame.node(j), frame.node(j + 1));
            let (u1, u2) = (v[j], v[j + 1]);
            if u1 >= -tol && u2 >= -tol {
                if (beta * x2).exp() * u2 < (beta * x1).exp() * u1 - tol {
                    violations.push(ContinuationViolation {
                        frame: fi,
                        x: x1,
                        interval_sign: 1,
                    });
                }
            } else if u1 <= tol && u2 <= tol {
                if (-beta * x2).exp() * u2 < (-beta * x1).exp() * u1 - tol {
                    violations.push(ContinuationViolation {
                        frame: fi,
                        x: x1,
                        interval_sign: -1,
                    });
                }
            }
        }
    }
    Ok(ContinuationReport {
        beta_used: beta,
        violations,
        nontrivial_zero_frames: zero_frames,
    })
}

/// Decay-based blowup test for line data: true when `u₀ = o(e^{-β_γ|x|})`
/// numerically — the scaled tail maxima `e^{β_γ X}·max_{|x|≥X}|u₀|` decrease
/// decisively along X ∈ {5, 10, 20}. Conservative: inconclusive decay
/// returns false.
pub fn decay_blowup_test_line(datum: &InitialDatum, gamma: f64) -> bool {
    let beta = match beta_gamma_nonperiodic(gamma) {
        BetaGamma::Finite(b) => b,
        BetaGamma::Infinite => return false,
    };
    let tail_max = |x_min: f64| {
        let mut m: f64 = 0.0;
        let steps = 4000;
        for j in 0..=steps {
            let x = x_min + 30.0 * j as f64 / steps as f64;
            m = m.max(datum.u(x).abs()).max(datum.u(-x).abs());
        }
        m
    };
    let s: Vec<f64> = [5.0, 10.0, 20.0]
        .iter()
        .map(|&x| (beta * x).exp() * tail_max(x))
        .collect();
    if s[0] == 0.0 {
        // compactly supported inside |x| < 5 (datum assumed nonzero)
        return true;
    }
    let drops = |a: f64, b: f64| b == 0.0 || b <= 0.5 * a;
    drops(s[0], s[1]) && drops(s[1], s[2])
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    #[test]
    fn sine_datum_triggers_camassa_holm() {
        let d = InitialDatum::sine(1.0, 1, 0.0);
        let v = check_blowup_periodic(&d, 1.0).unwrap();
        assert!(v.applicable && v.triggered);
        let x0 = v.witness_x0.unwrap();
        assert!((x0 - 0.5).abs() < 1e-6, "witness {x0}");
        // at the witness u₀ = 0: T* bound is 2/(γ|u₀'|) = 1/π exactly
        let t = v.tstar_bound.unwrap();
        assert!((t - 1.0 / PI).abs() < 1e-6, "tstar {t}");
        assert!((t - 0.3183).abs() < 1e-4);
        assert!((v.margin - (-2.0 * PI)).abs() < 1e-6);
    }

    #[test]
    fn constant_datum_never_triggers() {
        for &gamma in &[1.0, 3.0, -2.0] {
            let v = check_blowup_periodic(&InitialDatum::constant(0.7), gamma).unwrap();
            assert!(v.applicable && !v.triggered, "gamma={gamma}");
            assert!(v.tstar_bound.is_none());
        }
        // u ≡ 0 sits exactly on the boundary for γ = 3 (β₃ = 0)
        let v = check_blowup_periodic(&InitialDatum::constant(0.0), 3.0).unwrap();
        assert!(!v.triggered && v.boundary_inconclusive);
    }

    #[test]
    fn gamma_three_triggers_any_nonconstant() {
        let d = InitialDatum::sine(0.1, 1, 0.0);
        let v = check_blowup_periodic(&d, 3.0).unwrap();
        assert!(v.triggered);
        assert!((v.beta_used).abs() < 1e-12);
        // witness is the argmin of u₀' and both T* numbers are surfaced
        let t = v.tstar_bound.unwrap();
        assert!((t - 2.0 / (3.0 * 0.2 * PI)).abs() < 1e-6);
        let alt = v.tstar_gamma3_alt.unwrap();
        assert!((alt - 2.0 / 3.0 * (0.2 * PI).sqrt()).abs() < 1e-6);
        assert!((t - alt).abs() > 1e-2, "the two displays genuinely differ");
    }

    #[test]
    fn negative_gamma_flips_the_slope_sign() {
        let d = InitialDatum::sine(1.0, 1, 0.0);
        let v = check_blowup_periodic(&d, -2.0).unwrap();
        assert!(v.applicable && v.triggered);
        // criterion now fires where the slope is most positive: x₀ = 0 or 1
        let x0 = v.witness_x0.unwrap();
        assert!(x0.min(1.0 - x0) < 1e-6, "witness {x0}");
    }

    #[test]
    fn inapplicable_gamma_reports_na() {
        let v = check_blowup_periodic(&InitialDatum::sine(1.0, 1, 0.0), -0.539).unwrap();
        assert!(!v.applicable && !v.triggered);
        assert!(v.beta_used.is_infinite());
        assert!(check_blowup_periodic(&InitialDatum::sine(1.0, 1, 0.0), 0.0).is_err());
    }

    #[test]
    fn scaling_and_translation_invariance() {
        // scaling: witness at a zero of u₀ keeps the trigger; T* scales as 1/λ
        let d1 = InitialDatum::sine(1.0, 1, 0.0);
        let d3 = InitialDatum::sine(3.0, 1, 0.0);
        let v1 = check_blowup_periodic(&d1, 1.0).unwrap();
        let v3 = check_blowup_periodic(&d3, 1.0).unwrap();
        assert!(v1.triggered && v3.triggered);
        let (t1, t3) = (v1.tstar_bound.unwrap(), v3.tstar_bound.unwrap());
        assert!((t3 - t1 / 3.0).abs() < 1e-8, "t1={t1} t3={t3}");
        // translation via a phased Fourier mode: sin(2π(x-a))
        let shifted = |a: f64| {
            let c1 = Complex64::new(0.0, -0.5) * Complex64::new(0.0, -2.0 * PI * a).exp();
            InitialDatum::fourier(vec![Complex64::new(0.0, 0.0), c1])
        };
        for &a in &[0.0, 0.3, 0.77] {
            let v = check_blowup_periodic(&shifted(a), 1.0).unwrap();
            assert!((v.margin - v1.margin).abs() < 1e-8, "a={a}");
            assert!((v.tstar_bound.unwrap() - t1).abs() < 1e-8, "a={a}");
        }
    }

    #[test]
    fn fourier_and_sample_data_agree() {
        // same function through three representations
        let f = |x: f64| 0.4 * (2.0 * PI * x).sin() + 0.1 * (4.0 * PI * x).cos() + 0.2;
        let coeffs = vec![
            Complex64::new(0.2, 0.0),
            Complex64::new(0.0, -0.2),
            Complex64::new(0.05, 0.0),
        ];
        let df = InitialDatum::fourier(coeffs);
        let ds = InitialDatum::samples(GridFunction::from_fn(128, f).unwrap()).unwrap();
        for j in 0..40 {
            let x = j as f64 / 40.0;
            assert!((df.u(x) - f(x)).abs() < 1e-12);
            assert!((ds.u(x) - f(x)).abs() < 1e-10);
            assert!((df.ux(x) - ds.ux(x)).abs() < 1e-8);
        }
        let vf = check_blowup_periodic(&df, 1.0).unwrap();
        let vs = check_blowup_periodic(&ds, 1.0).unwrap();
        assert_eq!(vf.triggered, vs.triggered);
        assert!((vf.margin - vs.margin).abs() < 1e-8);
    }

    #[test]
    fn sample_regularity_gate() {
        assert!(InitialDatum::samples(GridFunction::from_fn(32, |x| x).unwrap()).is_err());
        // white-noise samples have no k⁻² decay
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
        let noisy = GridFunction::new((0..128).map(|_| rng.gen_range(-1.0..1.0)).collect()).unwrap();
        assert!(InitialDatum::samples(noisy).is_err());
        // smooth samples pass
        let smooth = GridFunction::from_fn(128, |x| (2.0 * PI * x).sin()).unwrap();
        assert!(InitialDatum::samples(smooth).is_ok());
    }

    #[test]
    fn line_criterion_cases() {
        // x·e^{-x²} at γ = 1 (β = 1): at large x, u' < 0 with |u| tiny
        let d = InitialDatum::from_fns_line(
            "x-gaussian",
            |x| x * (-x * x).exp(),
            |x| (1.0 - 2.0 * x * x) * (-x * x).exp(),
        );
        let v = check_blowup_line(&d, 1.0).unwrap();
        assert!(v.applicable && v.triggered);
        assert!(v.tstar_bound.is_some());
        // smoothed peakon: slope ratio stays strictly above -1, never triggers
        let p = InitialDatum::peakon_smoothed_line(1.0, 0.05);
        let vp = check_blowup_line(&p, 1.0).unwrap();
        assert!(!vp.triggered, "margin {}", vp.margin);
        assert!(vp.margin >= -BOUNDARY_TOL);
        // γ = 4 envelope datum: verdict must agree with a direct scan at β = 1/2
        let e = InitialDatum::from_fns_line(
            "sine-gaussian",
            |x| (2.0 * PI * x).sin() * (-x * x).exp(),
            |x| (2.0 * PI * (2.0 * PI * x).cos() - 2.0 * x * (2.0 * PI * x).sin()) * (-x * x).exp(),
        );
        let ve = check_blowup_line(&e, 4.0).unwrap();
        assert!((ve.beta_used - 0.5).abs() < 1e-12);
        assert_eq!(ve.triggered, ve.margin < -BOUNDARY_TOL);
        // out-of-range γ
        assert!(!check_blowup_line(&d, 0.9).unwrap().applicable);
        assert!(!check_blowup_line(&d, 4.2).unwrap().applicable);
        // domain mismatch
        assert!(check_blowup_line(&InitialDatum::sine(1.0, 1, 0.0), 1.0).is_err());
        assert!(check_blowup_periodic(&d, 1.0).is_err());
    }

    #[test]
    fn comparison_lemma_equality_case() {
        let c = 0.7;
        let h = 2.0;
        let (observed, bound) = comparison_lemma_harness(h, h, c, |f, g| (c * f * g, c * f * g)).unwrap();
        assert!((bound - 1.0 / (c * h)).abs() < 1e-14);
        assert!((observed - bound).abs() < 2e-3, "observed {observed} bound {bound}");
        assert!(observed <= bound + 1e-6);
    }

    #[test]
    fn comparison_lemma_strict_and_asymmetric() {
        let (obs, bound) =
            comparison_lemma_harness(1.0, 1.0, 1.0, |f, g| (f * g + 1.0, f * g + 1.0)).unwrap();
        assert!(obs < bound);
        // f0=4, g0=1: exact T = (1/3)ln4 < bound 1/2
        let (obs, bound) = comparison_lemma_harness(4.0, 1.0, 1.0, |f, g| (f * g, f * g)).unwrap();
        assert!((bound - 0.5).abs() < 1e-14);
        assert!((obs - 4f64.ln() / 3.0).abs() < 2e-3, "observed {obs}");
        assert!(obs <= 0.5);
        assert!(comparison_lemma_harness(-1.0, 1.0, 1.0, |f, g| (f * g, f * g)).is_err());
    }

    #[test]
    fn comparison_lemma_randomized_dominance() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(21);
        for trial in 0..50 {
            let f0 = rng.gen_range(0.3..4.0);
            let g0 = rng.gen_range(0.3..4.0);
            let c = rng.gen_range(0.2..2.0);
            let a = rng.gen_range(0.0..1.5);
            let b = rng.gen_range(0.0..0.5);
            let rhs = move |f: f64, g: f64| {
                (c * f * g * (1.0 + a) + b * f * f, c * f * g + b * (f + g))
            };
            let (obs, bound) = comparison_lemma_harness(f0, g0, c, rhs).unwrap();
            assert!(obs <= bound + 5e-3, "trial {trial}: observed {obs} bound {bound}");
        }
    }

    #[test]
    fn unique_continuation_verdicts() {
        // constant positive frame passes
        let frames = vec![GridFunction::from_fn(128, |_| 0.8).unwrap()];
        let r = unique_continuation_check(&frames, 1.0).unwrap();
        assert!(r.violations.is_empty());
        assert!(r.nontrivial_zero_frames.is_empty());
        // a hypothetical global sine frame violates monotonicity and carries
        // a nontrivial zero
        let frames = vec![GridFunction::from_fn(128, |x| (2.0 * PI * x).sin()).unwrap()];
        let r = unique_continuation_check(&frames, 1.0).unwrap();
        assert!(!r.violations.is_empty());
        assert_eq!(r.nontrivial_zero_frames, vec![0]);
        // inapplicable γ is an error
        assert!(unique_continuation_check(&frames, 0.1).is_err());
    }

    #[test]
    fn decay_tests_on_the_line() {
        let gauss = InitialDatum::gaussian(1.0, 0.0, 1.0);
        assert!(decay_blowup_test_line(&gauss, 1.0));
        // the smoothed peakon decays at exactly the threshold rate e^{-|x|}
        let peakon = InitialDatum::peakon_smoothed_line(1.0, 0.05);
        assert!(!decay_blowup_test_line(&peakon, 1.0));
        // compactly supported bump
        let bump = InitialDatum::from_fns_line(
            "bump",
            |x| if x.abs() < 1.0 { (1.0 - x * x).powi(3) } else { 0.0 },
            |x| if x.abs() < 1.0 { -6.0 * x * (1.0 - x * x).powi(2) } else { 0.0 },
        );
        assert!(decay_blowup_test_line(&bump, 2.0));
        // γ outside the closed-form range is conservative
        assert!(!decay_blowup_test_line(&gauss, 0.5));
    }

    #[test]
    fn peakon_smoothed_line_consistency() {
        // closed-form erfc evaluators against direct quadrature of the
        // mollified kernel, and the ε → 0 limit
        use crate::grid::simpson;
        let eps = 0.2;
        let d = InitialDatum::peakon_smoothed_line(1.0, eps);
        for &x in &[-1.3, 0.0, 0.4, 2.0] {
            let quad = simpson(
                |y| {
                    (-(x - y).abs()).exp() / 2.0
                        * (-y * y / (2.0 * eps * eps)).exp()
                        / (eps * (2.0 * PI).sqrt())
                },
                x - 8.0,
                x,
                1 << 12,
            ) + simpson(
                |y| {
                    (-(x - y).abs()).exp() / 2.0
                        * (-y * y / (2.0 * eps * eps)).exp()
                        / (eps * (2.0 * PI).sqrt())
                },
                x,
                x + 8.0,
                1 << 12,
            );
            assert!((d.u(x) - quad).abs() < 1e-10, "x={x}");
        }
        let sharp = InitialDatum::peakon_smoothed_line(1.0, 1e-4);
        assert!((sharp.u(1.0) - (-1f64).exp() / 2.0).abs() < 1e-6);
        assert!((sharp.ux(1.0) + (-1f64).exp() / 2.0).abs() < 1e-6);
        // circle variant: mean of p∗mollifier is 1
        let circ = InitialDatum::peakon_smoothed_circle(1.0, 0.05);
        let mean = simpson(|x| circ.u(x), 0.0, 1.0, 1 << 10);
        assert!((mean - 1.0).abs() < 1e-10);
    }
}
