//! Acceptance criteria, one PASS/FAIL line each. Exits non-zero if any fails.

mod common;

use std::f64::consts::{FRAC_PI_2, PI};
use std::process::ExitCode;
use std::time::Instant;

use hardy_core::angles::{cap_form, gamma_star, gamma_star_star};
use hardy_core::certify::forms::{claim1_margin, form_minimum, FORM_TOL};
use hardy_core::certify::{
    check_dbeta, check_ebg, check_one_reflex_polygon, check_sector_cap, sample_polar_graph, DomainSpec, FormKind,
    Verdict,
};
use hardy_core::ode::hprofile::{g_upper_bound, g_upper_residual, solve_h};
use hardy_core::ode::shoot_c;
use hardy_core::rayleigh::{build_grid, estimate_constant, GridProblem};
use hardy_core::sector::{riccati_residual_f, riccati_residual_g, TWO_PI};
use hardy_core::{beta_critical, solve_c_beta, Result, SectorProfile};

use common::{l_shape, notch_polygon, unit_square};

type Outcome = Result<(bool, String)>;

fn within(x: f64, target: f64, tol: f64) -> bool {
    (x - target).abs() <= tol
}

fn critical_angle() -> Outcome {
    let t = Instant::now();
    let b = beta_critical();
    let secs = t.elapsed().as_secs_f64();
    let ok = within(b / PI, 1.546, 0.001) && secs < 0.1;
    Ok((ok, format!("β_cr = {:.10}π in {:.4} s", b / PI, secs)))
}

fn slit_plane_constant() -> Outcome {
    let c = solve_c_beta(TWO_PI)?.c;
    let s = shoot_c(TWO_PI)?.c_estimate;
    let ok = within(c, 0.2054, 0.001) && (s - c).abs() <= 1e-6;
    Ok((ok, format!("c = {c:.10}, shooting {s:.10}, |Δ| = {:.2e}", (s - c).abs())))
}

fn oracle_sweep() -> Outcome {
    let t = Instant::now();
    let bcr = beta_critical();
    let mut worst: f64 = 0.0;
    for k in 1..=21 {
        let b = bcr + (TWO_PI - bcr) * k as f64 / 21.0;
        let d = (shoot_c(b)?.c_estimate - solve_c_beta(b)?.c).abs();
        worst = worst.max(d);
    }
    let secs = t.elapsed().as_secs_f64();
    Ok((worst <= 1e-6 && secs < 30.0, format!("max |Δc| = {worst:.2e} over 21 openings in {secs:.2} s")))
}

fn angle_table() -> Outcome {
    let bcr = beta_critical();
    let star = [(PI, 0.867), (bcr, 0.701), (TWO_PI, 0.673)];
    let star2 = [(bcr, 0.700), (TWO_PI, 0.672)];
    let mut ok = true;
    let mut parts = Vec::new();
    for (b, want) in star {
        let g = gamma_star(b)?.gamma_star / PI;
        ok &= within(g, want, 0.003);
        parts.push(format!("γ*={g:.4}π"));
    }
    for (b, want) in star2 {
        let g = gamma_star_star(b)? / PI;
        ok &= within(g, want, 0.003);
        parts.push(format!("γ**={g:.4}π"));
    }
    Ok((ok, parts.join(", ")))
}

fn comparison_functions() -> Outcome {
    let n = 400;
    let mut worst_gap = f64::INFINITY;
    for b in [beta_critical(), 1.7 * PI, TWO_PI] {
        let p = SectorProfile::shared(b)?;
        for k in 0..=n {
            let th = FRAC_PI_2 * k as f64 / n as f64;
            worst_gap = worst_gap.min(g_upper_bound(th, p.alpha())? - p.g(th)?);
        }
    }
    let profiles = [0.55, 0.65, 0.75, 0.85].map(solve_h);
    let mut increasing = true;
    for w in profiles.windows(2) {
        let (lo, hi) = (w[0].as_ref().map_err(Clone::clone)?, w[1].as_ref().map_err(Clone::clone)?);
        increasing &= lo.h.len() == 200 && lo.h.iter().zip(&hi.h).all(|(a, b)| a < b);
    }
    let mut worst_res = f64::INFINITY;
    let alphas: Vec<f64> = [beta_critical(), 1.7 * PI, TWO_PI]
        .iter()
        .map(|&b| SectorProfile::shared(b).map(|p| p.alpha()))
        .collect::<Result<_>>()?;
    for a in alphas.into_iter().chain([0.55, 0.65, 0.75, 0.85]) {
        for k in 1..n {
            let th = FRAC_PI_2 * k as f64 / n as f64;
            worst_res = worst_res.min(g_upper_residual(th, a)?);
        }
    }
    let ok = worst_gap >= -1e-9 && increasing && worst_res >= 0.0;
    Ok((ok, format!("min(ḡ−g) = {worst_gap:.3e}, h increasing in α: {increasing}, min residual = {worst_res:.3e}")))
}

fn certificate_suite() -> Outcome {
    let n = 400;
    let bcr = beta_critical();
    let betas = [1.1 * PI, 1.3 * PI, 1.5 * PI, bcr, 1.7 * PI, 1.85 * PI, TWO_PI];
    let mut worst = f64::INFINITY;
    let mut count = 0;
    let mut track = |v: f64| {
        worst = worst.min(v);
        count += 1;
    };
    for &b in &betas {
        // caps under the one-reflex hypothesis
        let bound = gamma_star(b)?.gamma_star.min((3.0 * PI - b) / 2.0);
        for g in [0.0, 0.2 * PI, 0.5 * PI, bound] {
            track(form_minimum(FormKind::LineSegment, b, g, n)?);
            track(form_minimum(FormKind::Parabola, b, g, n)?);
        }
        // segment and halflines, one reflex angle
        for g in [0.2 * PI, 0.4 * PI, 0.5 * PI] {
            track(form_minimum(FormKind::LineSegment, b, g, n)?);
            track(form_minimum(FormKind::Parabola, b, g, n)?);
            if b + g < TWO_PI {
                track(form_minimum(FormKind::HalfLine, b, g, n)?);
            }
        }
        for g in [0.6 * PI, 0.8 * PI, PI] {
            track(form_minimum(FormKind::TwoSided, b, g, n)?);
            track(form_minimum(FormKind::TwoSidedParabola, b, g, n)?);
            if b + g < TWO_PI {
                track(form_minimum(FormKind::Gamma3, b, g, n)?);
            }
            let claim =
                (0..=n).map(|k| claim1_margin(FRAC_PI_2 * k as f64 / n as f64, g)).fold(f64::INFINITY, f64::min);
            track(claim);
        }
        // Neumann arc with r monotone towards the bisector
        let samples = sample_polar_graph(b, n, |t| 1.0 + (t - b / 2.0).powi(2));
        let r = check_dbeta(b, &samples)?;
        for k in r.checks {
            track(k.margin);
        }
    }
    // deliberately outside: cap angle above γ*
    let p = SectorProfile::shared(TWO_PI)?;
    let gs = gamma_star(TWO_PI)?;
    let outside = cap_form(&p, gs.argmax_theta, gs.gamma_star + 0.05)?;
    let ok = worst >= -FORM_TOL && outside < 0.0;
    Ok((ok, format!("{count} grids, min form = {worst:.3e}; out-of-hypothesis value {outside:.3e}")))
}

fn variational() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    let cases: Vec<(&str, Result<GridProblem>, f64, f64)> = vec![
        ("slit disk n=256", build_grid(&DomainSpec::Sector { beta: TWO_PI }, 256), 0.200, 0.235),
        ("L-shape n=256", build_grid(&DomainSpec::OneReflexPolygon { vertices: l_shape() }, 256), 0.23, 0.27),
        ("strip n=128", GridProblem::strip(4.0, 1.0, 128), 0.23, 0.27),
    ];
    for (name, g, lo, hi) in cases {
        let t = Instant::now();
        let e = estimate_constant(&g?)?;
        let secs = t.elapsed().as_secs_f64();
        let pass = e.lambda >= lo && e.lambda <= hi && secs < 60.0;
        ok &= pass;
        parts.push(format!("{name}: λ = {:.4}, window [{lo}, {hi}], {secs:.1} s", e.lambda));
    }
    Ok((ok, parts.join("; ")))
}

fn continuity() -> Outcome {
    let bcr = beta_critical();
    let mut worst_jump: f64 = 0.0;
    let mut worst_res: f64 = 0.0;
    for k in 0..=10 {
        let b = bcr + (TWO_PI - bcr) * k as f64 / 10.0;
        let p = SectorProfile::shared(b)?;
        worst_jump = worst_jump.max(p.junction_mismatch()?);
        for j in 1..=200 {
            let th = b * j as f64 / 201.0;
            worst_res = worst_res.max(riccati_residual_f(&p, th)?.abs());
        }
        for j in 0..=100 {
            let th = 0.01 + (FRAC_PI_2 - 0.01) * j as f64 / 100.0;
            worst_res = worst_res.max(riccati_residual_g(&p, th)?.abs());
        }
    }
    let ok = worst_jump < 1e-8 && worst_res < 1e-6;
    Ok((ok, format!("max junction mismatch {worst_jump:.2e}, max Riccati residual {worst_res:.2e}")))
}

fn domain_checkers() -> Outcome {
    let c2 = solve_c_beta(TWO_PI)?.c;
    let mut results = Vec::new();

    results.push(check_one_reflex_polygon(&l_shape())?.verdict == Verdict::Certified { c: 0.25 });
    results.push(matches!(
        check_one_reflex_polygon(&notch_polygon(1.98 * PI, 0.9 * PI))?.verdict,
        Verdict::ConditionFailed { .. }
    ));
    results.push(check_one_reflex_polygon(&unit_square()).is_err());

    results.push(check_sector_cap(TWO_PI, 0.0, 0.0, false)?.verdict == Verdict::Certified { c: c2 });
    results.push(check_sector_cap(1.3 * PI, 0.65 * PI, 0.65 * PI, true)?.verdict == Verdict::Certified { c: 0.25 });
    results
        .push(matches!(check_sector_cap(TWO_PI, 0.75 * PI, 0.5 * PI, true)?.verdict, Verdict::ConditionFailed { .. }));

    results.push(check_ebg(1.8 * PI, 0.5 * PI)?.certified_constant() == Some(solve_c_beta(1.8 * PI)?.c));
    results.push(check_ebg(1.5 * PI, 1.5 * PI)?.certified_constant() == Some(c2));
    results.push(check_ebg(TWO_PI, PI)?.certified_constant() == Some(c2));

    let b = 1.7 * PI;
    results
        .push(check_dbeta(TWO_PI, &sample_polar_graph(TWO_PI, 64, |_| 1.0))?.verdict == Verdict::Certified { c: c2 });
    results.push(
        check_dbeta(b, &sample_polar_graph(b, 64, |t| 1.0 + (t - b / 2.0).powi(2)))?.certified_constant()
            == Some(solve_c_beta(b)?.c),
    );
    results.push(
        check_dbeta(TWO_PI, &sample_polar_graph(TWO_PI, 50, |t| 1.0 + (4.0 * t).sin()))?.verdict
            == Verdict::Inconclusive,
    );

    let passed = results.iter().filter(|&&r| r).count();
    Ok((passed == results.len(), format!("{passed}/{} worked examples reproduced", results.len())))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("critical angle", critical_angle),
        ("slit-plane constant", slit_plane_constant),
        ("oracle equivalence sweep", oracle_sweep),
        ("critical-angle table", angle_table),
        ("comparison functions", comparison_functions),
        ("certificate suite", certificate_suite),
        ("variational validation", variational),
        ("continuity and normalization", continuity),
        ("domain checkers", domain_checkers),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let (ok, detail) = match run() {
            Ok(r) => r,
            Err(e) => (false, format!("error: {e}")),
        };
        if !ok {
            failures += 1;
        }
        println!("criterion {} {name}: {} ({detail})", i + 1, if ok { "PASS" } else { "FAIL" });
    }
    println!("acceptance: {} passed, {failures} failed", criteria.len() - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
