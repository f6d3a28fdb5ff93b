//! The acceptance gate: one test per criterion, each printing a single
//! PASS/FAIL line (visible with `--nocapture`).

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rodwave::beta_limit;
use rodwave::criteria::{check_blowup_periodic, comparison_lemma_harness, InitialDatum};
use rodwave::grid::{simpson, GridFunction};
use rodwave::kernel::WeightSpec;
use rodwave::simulator::{detect_and_fit_blowup, run, SimConfig, Termination};
use rodwave::threshold::{
    beta_infinity, compute_beta_gamma, compute_critical_constants, scan_applicability,
    upper_bound_theorem2, ScanSpec,
};
use rodwave::variational::{
    alpha0, closed_form_i2, closed_form_i_beta1, closed_form_i_limit, convolution_estimate_check,
    eval_i, poincare_best_constant, poincare_with_weight, solve_el_fd, Infimum, MinProblem,
};
use std::f64::consts::{E, PI};
use std::time::Instant;

fn verdict(criterion: u32, ok: bool, detail: &str) {
    println!(
        "criterion {criterion:2}: {} — {detail}",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "criterion {criterion} failed: {detail}");
}

fn finite(v: &Infimum) -> f64 {
    v.finite().expect("finite infimum")
}

#[test]
fn criterion_01_values_table() {
    let clock = Instant::now();
    let sh = 0.5f64.sinh();
    let exact = [
        1.0 + sh.atan() / (sh + sh.atan() * sh * sh),
        -0.5 + 1.5 * (0.5f64.cosh() * 1.5f64.cosh() - 1.0) / (sh * 1.5f64.sinh()),
        (E + 1.0) * (E + 1.0) / (E * E + 1.0),
    ];
    let closed = [
        finite(&closed_form_i2(0.0).unwrap().value),
        finite(&closed_form_i_beta1(2.0).value),
        finite(&closed_form_i_limit(2.0).value),
    ];
    let fd = [
        finite(&solve_el_fd(MinProblem::new(2.0, 0.0), 512).unwrap().value),
        finite(&solve_el_fd(MinProblem::new(2.0, 1.0), 512).unwrap().value),
        finite(&solve_el_fd(MinProblem::new(2.0, beta_limit()), 512).unwrap().value),
    ];
    let quoted = [1.737, 1.734, 1.64808];
    let mut ok = true;
    for k in 0..3 {
        ok &= (closed[k] - exact[k]).abs() < 1e-6;
        ok &= (fd[k] - exact[k]).abs() < 1e-3;
        ok &= (exact[k] - quoted[k]).abs() < 1e-3;
    }
    let elapsed = clock.elapsed().as_secs_f64();
    ok &= elapsed < 1.0;
    verdict(
        1,
        ok,
        &format!(
            "values table: closed {closed:?}, fd {fd:?}, {elapsed:.2}s"
        ),
    );
}

#[test]
fn criterion_02_critical_constants() {
    let clock = Instant::now();
    let c = compute_critical_constants().unwrap();
    let got = [c.gamma1_minus, c.gamma1_plus, c.gamma2_minus, c.gamma2_plus];
    let want = [-1.036, 0.269, -1.508, 0.575];
    let ok = got
        .iter()
        .zip(&want)
        .all(|(g, w)| (g - w).abs() < 1e-3)
        && clock.elapsed().as_secs_f64() < 5.0;
    verdict(
        2,
        ok,
        &format!("gamma window {got:?} in {:.2}s", clock.elapsed().as_secs_f64()),
    );
}

#[test]
fn criterion_03_alpha0_cross_check() {
    let a0 = alpha0();
    let c_lim = poincare_best_constant(beta_limit()).unwrap().c;
    let ok = (a0 + 6.113).abs() < 1e-3
        && (c_lim - 0.164).abs() < 1e-3
        && (c_lim + 1.0 / a0).abs() < 1e-3;
    verdict(
        3,
        ok,
        &format!("alpha0 = {a0:.6}, C(lim) = {c_lim:.6}, -1/alpha0 = {:.6}", -1.0 / a0),
    );
}

#[test]
fn criterion_04_beta_gamma_curve_and_bounds() {
    let clock = Instant::now();
    let beta1 = compute_beta_gamma(1.0).unwrap().beta_gamma.unwrap();
    let (beta_inf, bound_inf) = beta_infinity();
    let bound1 = upper_bound_theorem2(1.0).unwrap().unwrap();
    let mut ok = (beta1 - 0.513).abs() < 1e-3
        && (beta_inf - 0.295).abs() < 1e-3
        && (bound1 - 0.515).abs() < 1e-3
        && (bound_inf - 0.296).abs() < 1e-3;
    // dominance: numeric threshold below the closed-form bound on 40 gammas
    let mut gammas = Vec::new();
    for j in 0..20 {
        gammas.push(-8.0 + j as f64 * (8.0 - 1.05) / 19.0); // [-8, -1.05]
        gammas.push(0.28 + j as f64 * (8.0 - 0.28) / 19.0); // [0.28, 8]
    }
    let mut compared = 0;
    for &g in &gammas {
        let bound = upper_bound_theorem2(g).unwrap();
        let numeric = compute_beta_gamma(g).unwrap().beta_gamma;
        if let (Some(b), Some(n)) = (bound, numeric.finite()) {
            compared += 1;
            if n > b + 1e-3 {
                ok = false;
            }
        }
    }
    ok &= compared >= 40;
    let elapsed = clock.elapsed().as_secs_f64();
    ok &= elapsed < 120.0;
    verdict(
        4,
        ok,
        &format!(
            "beta1 = {beta1:.6}, beta_inf = {beta_inf:.6}, bounds ({bound1:.6}, {bound_inf:.6}), dominance on {compared} gammas in {elapsed:.1}s"
        ),
    );
}

#[test]
fn criterion_05_materials_table() {
    let mut ok = true;
    for (gamma, published, tol) in rodwave::report::MATERIALS {
        let computed = compute_beta_gamma(gamma).unwrap().beta_gamma;
        ok &= match (published, computed.finite()) {
            (Some(p), Some(c)) => (p - c).abs() < tol,
            (None, None) => true,
            _ => false,
        };
    }
    verdict(5, ok, "materials table: 8 entries +-2e-3, -4.891 at 0.492 +-1e-2, -0.539 n.a.");
}

#[test]
fn criterion_06_applicability_region() {
    let scan = scan_applicability(ScanSpec {
        gamma_min: -1.0,
        gamma_max: 0.3,
        steps: 13,
    })
    .unwrap();
    let ok = (scan.gamma_left + 0.817).abs() < 5e-3
        && (scan.gamma_right - 0.262).abs() < 5e-3
        && (scan.alpha_min + 4.669).abs() < 1e-2
        && (scan.alpha_max - 10.428).abs() < 1e-2;
    verdict(
        6,
        ok,
        &format!(
            "gamma window [{:.4}, {:.4}], alpha interval [{:.4}, {:.4}]",
            scan.gamma_left, scan.gamma_right, scan.alpha_min, scan.alpha_max
        ),
    );
}

#[test]
fn criterion_07_poincare_constants() {
    let c1 = poincare_best_constant(1.0).unwrap().c;
    let unweighted = poincare_with_weight(|_| 1.0, 2048).unwrap();
    let ok = (c1 - 4.0 / (1.0 + 4.0 * PI * PI)).abs() < 1e-6
        && (unweighted - 1.0 / (PI * PI)).abs() < 1e-8;
    verdict(
        7,
        ok,
        &format!("C(1) = {c1:.9}, unweighted = {unweighted:.10}"),
    );
}

#[test]
fn criterion_08_property_suites() {
    let mut ok = true;
    // parity
    for (a, b) in [(3.7, 0.6), (-1.2, 1.7), (2.0, 0.25)] {
        let plus = finite(&eval_i(MinProblem::new(a, b)).unwrap().value);
        let minus = finite(&eval_i(MinProblem::new(a, -b)).unwrap().value);
        ok &= (plus - minus).abs() < 1e-12;
    }
    // concavity in beta along alpha = 2 (closed form)
    let lim = beta_limit();
    let h = lim / 64.0;
    for j in 1..63 {
        let b = j as f64 * h;
        let second = finite(&closed_form_i2(b + h).unwrap().value)
            - 2.0 * finite(&closed_form_i2(b).unwrap().value)
            + finite(&closed_form_i2(b - h).unwrap().value);
        ok &= second < 1e-9;
    }
    // concavity in alpha along beta = 1 (closed form)
    for j in 0..40 {
        let a = -0.2 + 0.2 * j as f64;
        let second = finite(&closed_form_i_beta1(a + 0.2).value)
            - 2.0 * finite(&closed_form_i_beta1(a).value)
            + finite(&closed_form_i_beta1(a - 0.2).value);
        ok &= second < 1e-9;
    }
    // ordering I(a, lim) <= I(a, b) <= I(a, 0) <= a
    for a in [-3.0, -0.5, 1.0, 2.0, 5.0] {
        let to_f = |v: &Infimum| v.finite().unwrap_or(f64::NEG_INFINITY);
        let at_lim = to_f(&eval_i(MinProblem::new(a, lim)).unwrap().value);
        let at_zero = to_f(&eval_i(MinProblem::new(a, 0.0)).unwrap().value);
        ok &= at_zero <= a + 1e-9;
        for b in [0.3, 0.7, 1.0, 1.8] {
            let mid = to_f(&eval_i(MinProblem::new(a, b)).unwrap().value);
            ok &= at_lim <= mid + 1e-6 && mid <= at_zero + 1e-6;
        }
    }
    // convolution-estimate nonnegativity on 100 random smooth data
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let problems = [(2.0, 0.0), (2.0, 1.0), (1.0, 0.5), (-0.5, 1.0)];
    for trial in 0..100 {
        let (a, b) = problems[trial % problems.len()];
        let coeffs: Vec<(f64, f64, f64)> = (1..=6)
            .map(|k| {
                (
                    k as f64,
                    rng.gen_range(-1.0..1.0) / (k * k) as f64,
                    rng.gen_range(0.0..2.0 * PI),
                )
            })
            .collect();
        let offset = rng.gen_range(-2.0..2.0);
        let u = GridFunction::from_fn(256, |x| {
            offset
                + coeffs
                    .iter()
                    .map(|&(k, amp, ph)| amp * (2.0 * PI * k * x + ph).sin())
                    .sum::<f64>()
        })
        .unwrap();
        let m = convolution_estimate_check(MinProblem::new(a, b), &u).unwrap();
        let scale = u.max_abs().powi(2).max(1.0);
        ok &= m > -1e-8 * scale;
    }
    // sharpness at the transplanted minimizer (alpha = 2, beta = 1, mu = 3/2):
    // the functional value at ubar reproduces I(2,1)
    let mu = 1.5f64;
    let ubar = |x: f64| {
        (E.sqrt() * (mu * x).sinh() + (mu * (1.0 - x)).sinh()) / ((0.5 * x).exp() * mu.sinh())
    };
    let ubar_x = |x: f64| {
        -0.5 * ubar(x)
            + mu * (E.sqrt() * (mu * x).cosh() - (mu * (1.0 - x)).cosh())
                / ((0.5 * x).exp() * mu.sinh())
    };
    let w = WeightSpec::new(1.0);
    let functional = simpson(
        |t| w.eval_unchecked(t) * (2.0 * ubar(t) * ubar(t) + ubar_x(t) * ubar_x(t)),
        0.0,
        1.0,
        1 << 12,
    );
    let sharp_residual = (functional - finite(&closed_form_i_beta1(2.0).value)).abs();
    ok &= sharp_residual < 1e-3;
    // Euler-Lagrange residual of the FD minimizer: (w v')' - a w v = a w
    let problem = MinProblem::new(2.0, 0.5);
    let r = solve_el_fd(problem, 2048).unwrap();
    let v: Vec<f64> = r.minimizer.iter().map(|u| u - 1.0).collect();
    let n = v.len() - 1;
    let hh = 1.0 / n as f64;
    let wspec = WeightSpec::new(0.5);
    let mut el_max = 0.0f64;
    for j in 1..n {
        let x = j as f64 * hh;
        let wp = wspec.eval_unchecked(x + 0.5 * hh);
        let wm = wspec.eval_unchecked(x - 0.5 * hh);
        let lhs = (wp * (v[j + 1] - v[j]) - wm * (v[j] - v[j - 1])) / (hh * hh);
        let res = lhs - 2.0 * wspec.eval_unchecked(x) * (v[j] + 1.0);
        el_max = el_max.max(res.abs());
    }
    ok &= el_max < 1e-4;
    verdict(
        8,
        ok,
        &format!("parity/concavity/ordering hold; sharpness residual {sharp_residual:.2e}; EL residual {el_max:.2e}"),
    );
}

#[test]
fn criterion_09_simulation_vs_theory() {
    let clock = Instant::now();
    let mut ok = true;
    let mut detail = String::new();
    // (gamma, amplitude, slope_stop) tuned so that the final decade of slope
    // growth stays inside the spectrally resolved regime at N = 512
    for (gamma, amp, stop) in [(1.0, 1.0, 55.0), (2.0, 1.0, 110.0), (3.0, 0.1, 16.0)] {
        let mut cfg = SimConfig::new(gamma, 512).unwrap();
        cfg.t_max = 2.0;
        cfg.slope_stop = stop;
        cfg.cfl_safety = 0.005;
        cfg.frame_stride = 100000;
        let u0 = GridFunction::from_fn(512, |x| amp * (2.0 * PI * x).sin()).unwrap();
        let out = run(&cfg, &u0).unwrap();
        ok &= out.termination == Termination::SlopeStop;
        let fit = detect_and_fit_blowup(&out);
        let rate = fit.rate_coeff.unwrap_or(f64::NAN);
        let t_star = fit.t_star_est.unwrap_or(f64::NAN);
        ok &= (rate - 2.0 / gamma).abs() / (2.0 / gamma) < 0.1;
        let bound = check_blowup_periodic(&InitialDatum::sine(amp, 1, 0.0), gamma)
            .unwrap()
            .tstar_bound
            .unwrap();
        ok &= out.final_t <= bound && t_star <= bound;
        let e0 = out.energies[0];
        ok &= out
            .energies
            .iter()
            .all(|e| (e - e0).abs() / e0 < 1e-6);
        detail.push_str(&format!(
            "gamma={gamma}: rate {rate:.3} (want {:.3}), t* {t_star:.3} <= bound {bound:.3}; ",
            2.0 / gamma
        ));
    }
    // gamma = 0: global to t = 10 with conserved energy
    let mut cfg = SimConfig::new(0.0, 512).unwrap();
    cfg.t_max = 10.0;
    let u0 = GridFunction::from_fn(512, |x| 0.5 * (2.0 * PI * x).sin()).unwrap();
    let out = run(&cfg, &u0).unwrap();
    ok &= out.termination == Termination::ReachedTMax;
    let e0 = out.energies[0];
    ok &= out.energies.iter().all(|e| (e - e0).abs() / e0 < 1e-6);
    ok &= !detect_and_fit_blowup(&out).detected;
    let elapsed = clock.elapsed().as_secs_f64();
    ok &= elapsed < 300.0;
    verdict(9, ok, &format!("{detail}gamma=0 global to t=10; {elapsed:.0}s"));
}

#[test]
fn criterion_10_comparison_lemma() {
    let mut ok = true;
    // equality case f' = g' = c f g: known solution, divergence at the bound
    let (c, f0, g0) = (0.7, 2.0, 2.0);
    let (observed, bound) = comparison_lemma_harness(f0, g0, c, |f, g| (c * f * g, c * f * g)).unwrap();
    let equality_gap = (observed - bound).abs();
    ok &= equality_gap < 0.02 * bound;
    // 50 randomized dominating right-hand sides: divergence never later than
    // the lemma bound (up to step tolerance)
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for _ in 0..50 {
        let c = rng.gen_range(0.2..2.0);
        let f0 = rng.gen_range(0.5..3.0);
        let g0 = rng.gen_range(0.5..3.0);
        let af = 1.0 + rng.gen_range(0.0..1.0);
        let ag = 1.0 + rng.gen_range(0.0..1.0);
        let extra_f = rng.gen_range(0.0..0.5);
        let extra_g = rng.gen_range(0.0..0.5);
        let (observed, bound) = comparison_lemma_harness(f0, g0, c, |f, g| {
            (af * c * f * g + extra_f * f, ag * c * f * g + extra_g * g)
        })
        .unwrap();
        ok &= observed <= bound * 1.02;
    }
    verdict(
        10,
        ok,
        &format!("equality case gap {equality_gap:.3e}; 50 dominating RHS within the bound"),
    );
}
