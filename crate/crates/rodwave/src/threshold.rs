//! The blowup threshold `β_γ = inf{β ≥ 0 : β² + I(α,β) - α ≥ 0}` with
//! `α = (3-γ)/γ`, the critical constants α₁±, α₂±, γ₁±, γ₂±, the analytic
//! upper bounds (β = 1 test weight, and the piecewise-affine quadratic root),
//! the γ → ∞ limit, the non-periodic threshold, and the applicability scan.

use crate::variational::{
    alpha0, closed_form_i2, closed_form_i_beta1, closed_form_i_limit, solve_el_fd, Infimum,
    MinProblem,
};
use crate::{beta_limit, Result, RodError};
use std::sync::OnceLock;

const E: f64 = std::f64::consts::E;

/// The pair (γ, α) with `α = (3-γ)/γ`, equivalently `γ = 3/(1+α)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GammaParams {
    pub gamma: f64,
    pub alpha: f64,
}

impl GammaParams {
    pub fn new(gamma: f64) -> Result<Self> {
        if gamma == 0.0 {
            return Err(RodError::domain(
                "gamma = 0 is the BBM case: all solutions are global and the \
                 blowup scenario is never fulfilled",
            ));
        }
        Ok(GammaParams {
            gamma,
            alpha: (3.0 - gamma) / gamma,
        })
    }

    pub fn from_alpha(alpha: f64) -> Self {
        GammaParams {
            gamma: 3.0 / (1.0 + alpha),
            alpha,
        }
    }
}

/// The threshold value, with +∞ as a tagged state rather than a sentinel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BetaGamma {
    Finite(f64),
    Infinite,
}

impl BetaGamma {
    pub fn is_finite(&self) -> bool {
        matches!(self, BetaGamma::Finite(_))
    }

    pub fn finite(&self) -> Option<f64> {
        match self {
            BetaGamma::Finite(v) => Some(*v),
            BetaGamma::Infinite => None,
        }
    }

    pub fn unwrap(&self) -> f64 {
        self.finite().expect("beta_gamma is infinite")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ThresholdMethod {
    RootFind,
    ClosedBoundCheck,
}

#[derive(Debug, Clone, Copy)]
pub struct BetaGammaResult {
    pub gamma: f64,
    pub alpha: f64,
    pub beta_gamma: BetaGamma,
    pub method: ThresholdMethod,
    /// Final bisection bracket when the threshold was root-found.
    pub bracket: Option<(f64, f64)>,
}

/// α₀ together with the intersection constants of the two explicit weights
/// and their γ counterparts `γ = 3/(1+α)`.
#[derive(Debug, Clone, Copy)]
pub struct CriticalConstants {
    pub alpha0: f64,
    pub alpha1_minus: f64,
    pub alpha1_plus: f64,
    pub alpha2_minus: f64,
    pub alpha2_plus: f64,
    pub gamma1_minus: f64,
    pub gamma1_plus: f64,
    pub gamma2_minus: f64,
    pub gamma2_plus: f64,
}

/// `I(α,β)` for the scans, with -∞ mapped onto the float flag. Routes to the
/// closed forms where available, otherwise a moderate-resolution FD solve
/// (the value only enters root-finding with tolerance 10⁻⁶ in β).
fn i_for_scan(alpha: f64, beta: f64) -> f64 {
    let lim = beta_limit();
    let res = if (beta - lim).abs() < 1e-12 {
        closed_form_i_limit(alpha)
    } else if (beta - 1.0).abs() < 1e-12 {
        closed_form_i_beta1(alpha)
    } else if (alpha - 2.0).abs() < 1e-12 {
        closed_form_i2(beta).expect("beta admissible in scan")
    } else {
        solve_el_fd(MinProblem::new(alpha, beta), 512).expect("scan solve")
    };
    match res.value {
        Infimum::Finite(v) => v,
        Infimum::NegInfinity => f64::NEG_INFINITY,
    }
}

/// The structure function `g(β) = β² + I(α,β) - α` whose smallest
/// nonnegative point is the threshold.
pub fn threshold_gap(alpha: f64, beta: f64) -> f64 {
    beta * beta + i_for_scan(alpha, beta) - alpha
}

/// Smallest zero crossing of `g` on `[0, (e+1)/(e-1)]` at a given grid
/// resolution, or `None` when `g < 0` throughout.
fn first_crossing(alpha: f64, n: usize) -> Option<f64> {
    let lim = beta_limit();
    let g0 = threshold_gap(alpha, 0.0);
    if g0 >= 0.0 {
        return Some(0.0);
    }
    let mut prev = (0.0, g0);
    for j in 1..=n {
        let b = j as f64 * lim / n as f64;
        let g = threshold_gap(alpha, b);
        if g >= 0.0 {
            // bisect [prev, b]
            let (mut lo, mut hi) = (prev.0, b);
            while hi - lo > 1e-7 {
                let mid = 0.5 * (lo + hi);
                if threshold_gap(alpha, mid) >= 0.0 {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            return Some(0.5 * (lo + hi));
        }
        prev = (b, g);
    }
    None
}

fn beta_gamma_for_alpha(alpha: f64) -> (BetaGamma, ThresholdMethod, Option<(f64, f64)>) {
    if alpha <= alpha0() {
        // I(α,β) = -∞ already at the limit weight: no admissible β at all
        return (BetaGamma::Infinite, ThresholdMethod::ClosedBoundCheck, None);
    }
    // grid-then-bisect, doubling the grid until two resolutions agree
    let mut prev_root: Option<f64> = None;
    for &n in &[64usize, 128, 256] {
        match first_crossing(alpha, n) {
            None => {
                if n > 64 {
                    return (BetaGamma::Infinite, ThresholdMethod::RootFind, None);
                }
            }
            Some(root) => {
                if let Some(p) = prev_root {
                    if (p - root).abs() <= 1e-4 {
                        return (
                            BetaGamma::Finite(root),
                            ThresholdMethod::RootFind,
                            Some((root - 1e-7, root + 1e-7)),
                        );
                    }
                }
                prev_root = Some(root);
            }
        }
    }
    match prev_root {
        Some(root) => (
            BetaGamma::Finite(root),
            ThresholdMethod::RootFind,
            Some((root - 1e-7, root + 1e-7)),
        ),
        None => (BetaGamma::Infinite, ThresholdMethod::RootFind, None),
    }
}

/// The blowup threshold β_γ.
pub fn compute_beta_gamma(gamma: f64) -> Result<BetaGammaResult> {
    let params = GammaParams::new(gamma)?;
    let (beta_gamma, method, bracket) = beta_gamma_for_alpha(params.alpha);
    Ok(BetaGammaResult {
        gamma,
        alpha: params.alpha,
        beta_gamma,
        method,
        bracket,
    })
}

/// Bisection-safeguarded Newton refinement of a bracketed simple zero.
fn refine_zero(f: &dyn Fn(f64) -> f64, mut lo: f64, mut hi: f64, tol: f64) -> f64 {
    let mut flo = f(lo);
    let mut x = 0.5 * (lo + hi);
    for _ in 0..200 {
        let fx = f(x);
        if fx == 0.0 || hi - lo < tol {
            break;
        }
        if flo * fx < 0.0 {
            hi = x;
        } else {
            lo = x;
            flo = fx;
        }
        let h = 1e-6 * (1.0 + x.abs());
        let d = (f(x + h) - f(x - h)) / (2.0 * h);
        let newton = x - fx / d;
        x = if d.is_finite() && newton > lo && newton < hi {
            newton
        } else {
            0.5 * (lo + hi)
        };
    }
    x
}

/// Both zeros of a function with a single positive bump on `[a, b]`.
fn two_zeros(f: &dyn Fn(f64) -> f64, a: f64, b: f64, step: f64, tol: f64) -> Result<(f64, f64)> {
    let mut zeros = Vec::new();
    let mut x = a;
    let mut fx = f(x);
    while x < b && zeros.len() < 2 {
        let xn = (x + step).min(b);
        let fxn = f(xn);
        if fx * fxn < 0.0 {
            zeros.push(refine_zero(f, x, xn, tol));
        }
        x = xn;
        fx = fxn;
    }
    match zeros.as_slice() {
        [z1, z2] => Ok((*z1, *z2)),
        _ => Err(RodError::internal("expected exactly two sign changes")),
    }
}

/// The critical constants, computed once and cached.
pub fn compute_critical_constants() -> Result<CriticalConstants> {
    static CACHE: OnceLock<CriticalConstants> = OnceLock::new();
    if let Some(cc) = CACHE.get() {
        return Ok(*cc);
    }
    let lim = beta_limit();
    // h₁(α) = lim² + I(α,lim) - α and h₂(α) = 1 + I(α,1) - α
    let h1 = |alpha: f64| {
        lim * lim
            + closed_form_i_limit(alpha)
                .value
                .finite()
                .unwrap_or(f64::NEG_INFINITY)
            - alpha
    };
    let h2 = |alpha: f64| {
        1.0 + closed_form_i_beta1(alpha)
            .value
            .finite()
            .unwrap_or(f64::NEG_INFINITY)
            - alpha
    };
    let (a1m, a1p) = two_zeros(&h1, alpha0() + 0.05, 12.0, 0.25, 1e-10)?;
    let (a2m, a2p) = two_zeros(&h2, alpha0() + 0.05, 12.0, 0.25, 1e-10)?;
    let cc = CriticalConstants {
        alpha0: alpha0(),
        alpha1_minus: a1m,
        alpha1_plus: a1p,
        alpha2_minus: a2m,
        alpha2_plus: a2p,
        gamma1_minus: 3.0 / (1.0 + a1m),
        gamma1_plus: 3.0 / (1.0 + a1p),
        gamma2_minus: 3.0 / (1.0 + a2m),
        gamma2_plus: 3.0 / (1.0 + a2p),
    };
    Ok(*CACHE.get_or_init(|| cc))
}

/// The analytic upper bounds on β_γ: the β = 1 test-weight radical
/// `√(α - I(α,1))` where it stays ≤ 1 (γ ≤ γ₂⁻ or γ ≥ γ₂⁺), the quadratic
/// root of the piecewise-affine lower bound on the flanks
/// `[γ₂⁻,γ₁⁻] ∪ [γ₁⁺,γ₂⁺]`, and `None` inside `(γ₁⁻,γ₁⁺)` where the
/// criterion is void.
pub fn upper_bound_theorem2(gamma: f64) -> Result<Option<f64>> {
    let cc = compute_critical_constants()?;
    if gamma > cc.gamma1_minus && gamma < cc.gamma1_plus {
        return Ok(None);
    }
    let alpha = GammaParams::new(gamma)?.alpha;
    let i1 = closed_form_i_beta1(alpha)
        .value
        .finite()
        .ok_or_else(|| RodError::internal("I(alpha,1) = -inf inside bound range"))?;
    if gamma <= cc.gamma2_minus || gamma >= cc.gamma2_plus {
        // radicand is nonnegative in this range; clamp round-off (γ = 3 → 0)
        return Ok(Some((alpha - i1).max(0.0).sqrt()));
    }
    let ilim = closed_form_i_limit(alpha)
        .value
        .finite()
        .ok_or_else(|| RodError::internal("I(alpha,lim) = -inf inside bound range"))?;
    let b = (E - 1.0) / 2.0 * (ilim - i1);
    let c = (E + 1.0) / 2.0 * i1 - (E - 1.0) / 2.0 * ilim - alpha;
    Ok(Some(-b / 2.0 + (b * b - 4.0 * c).sqrt() / 2.0))
}

/// The γ → ±∞ limit `β∞` (α = -1) together with its closed-form upper bound.
pub fn beta_infinity() -> (f64, f64) {
    let (value, _, _) = beta_gamma_for_alpha(-1.0);
    let s3 = 3f64.sqrt();
    let bound = (s3 * (1.0 - 0.5f64.cosh() * (s3 / 2.0).cos())
        / (2.0 * 0.5f64.sinh() * (s3 / 2.0).sin())
        - 0.5)
        .sqrt();
    (value.unwrap(), bound)
}

/// The non-periodic (real-line) threshold
/// `β_γ = √(-1/2 + 3/γ - √(12-3γ)/(2√γ))`, finite exactly for `γ ∈ [1,4]`.
pub fn beta_gamma_nonperiodic(gamma: f64) -> BetaGamma {
    if !(1.0..=4.0).contains(&gamma) {
        return BetaGamma::Infinite;
    }
    let radicand = -0.5 + 3.0 / gamma - (12.0 - 3.0 * gamma).sqrt() / (2.0 * gamma.sqrt());
    BetaGamma::Finite(radicand.max(0.0).sqrt())
}

/// The real-line infimum `I_ℝ(α,β) = -1/2 + (1/2)√(1+4α)`, finite exactly
/// for `α ≥ -1/4` and `|β| ≤ 1` (and then independent of β).
pub fn i_line(alpha: f64, beta: f64) -> Infimum {
    if alpha < -0.25 || beta.abs() > 1.0 {
        return Infimum::NegInfinity;
    }
    Infimum::Finite(-0.5 + 0.5 * (1.0 + 4.0 * alpha).sqrt())
}

#[derive(Debug, Clone, Copy)]
pub struct ScanSpec {
    pub gamma_min: f64,
    pub gamma_max: f64,
    pub steps: usize,
}

#[derive(Debug, Clone, Copy)]
pub struct ApplicabilityRow {
    pub gamma: f64,
    pub alpha: f64,
    pub finite: bool,
}

#[derive(Debug, Clone)]
pub struct ApplicabilityScan {
    pub rows: Vec<ApplicabilityRow>,
    /// Closure of the inapplicability window in γ: β_γ = +∞ on
    /// `[gamma_left, 0) ∪ (0, gamma_right]`.
    pub gamma_left: f64,
    pub gamma_right: f64,
    /// α-interval on which the defining set is nonempty.
    pub alpha_min: f64,
    pub alpha_max: f64,
}

/// Golden-section maximization of a unimodal refinement bracket.
fn golden_max(f: &dyn Fn(f64) -> f64, mut a: f64, mut b: f64, tol: f64) -> f64 {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut x1 = b - inv_phi * (b - a);
    let mut x2 = a + inv_phi * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    while b - a > tol {
        if f1 < f2 {
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
    f1.max(f2)
}

/// `max_β (β² + I(α,β)) - α`: nonnegative exactly where β_γ(α) is finite.
fn applicability_excess(alpha: f64) -> f64 {
    let lim = beta_limit();
    let h = |b: f64| b * b + i_for_scan(alpha, b);
    let n = 64;
    let mut best = f64::NEG_INFINITY;
    let mut best_j = 0usize;
    for j in 0..=n {
        let v = h(j as f64 * lim / n as f64);
        if v > best {
            best = v;
            best_j = j;
        }
    }
    // golden refinement around the coarse argmax
    let lo = (best_j.saturating_sub(1)) as f64 * lim / n as f64;
    let hi = ((best_j + 1).min(n)) as f64 * lim / n as f64;
    golden_max(&h, lo, hi, 1e-7).max(best) - alpha
}

/// Scans γ for finiteness of β_γ and locates the boundary of the finite
/// region by bisection in α.
pub fn scan_applicability(spec: ScanSpec) -> Result<ApplicabilityScan> {
    let cc = compute_critical_constants()?;
    // the defining set is nonempty at α₁± (test weight β = lim works there);
    // bisect outward from those for the exact α boundary
    let bisect = |mut inside: f64, mut outside: f64| -> f64 {
        for _ in 0..30 {
            let mid = 0.5 * (inside + outside);
            if applicability_excess(mid) >= 0.0 {
                inside = mid;
            } else {
                outside = mid;
            }
        }
        0.5 * (inside + outside)
    };
    let alpha_max = bisect(cc.alpha1_plus, cc.alpha1_plus + 2.0);
    let alpha_min = bisect(cc.alpha1_minus, cc.alpha1_minus - 2.0);
    let gamma_left = 3.0 / (1.0 + alpha_min);
    let gamma_right = 3.0 / (1.0 + alpha_max);
    let mut rows = Vec::with_capacity(spec.steps + 1);
    for j in 0..=spec.steps {
        let gamma = spec.gamma_min
            + (spec.gamma_max - spec.gamma_min) * j as f64 / spec.steps.max(1) as f64;
        if gamma == 0.0 {
            continue;
        }
        let alpha = (3.0 - gamma) / gamma;
        rows.push(ApplicabilityRow {
            gamma,
            alpha,
            finite: (alpha_min..=alpha_max).contains(&alpha),
        });
    }
    Ok(ApplicabilityScan {
        rows,
        gamma_left,
        gamma_right,
        alpha_min,
        alpha_max,
    })
}
