//! Critical cap angles γ*_β and γ**_β.
//!
//! cot(γ/2) = max over θ ∈ [0, π/2] of sinθ/(cosθ + α/G(θ)), with G = g for
//! γ* and G = ḡ for γ**. The objective is evaluated in the division-free form
//! G·sinθ/(G·cosθ + α).

use std::f64::consts::{FRAC_PI_2, PI};

use serde::{Deserialize, Serialize};

use crate::error::{HardyError, Result};
use crate::ode::hprofile::g_upper_bound;
use crate::sector::{beta_critical, SectorProfile, TWO_PI};

const SCAN_POINTS: usize = 400;
const GOLDEN_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CriticalAngles {
    pub beta: f64,
    pub gamma_star: f64,
    pub gamma_star_star: Option<f64>,
    pub argmax_theta: f64,
}

fn objective(g: f64, alpha: f64, theta: f64) -> f64 {
    g * theta.sin() / (g * theta.cos() + alpha)
}

/// Maximizes `obj` on [0, π/2]: dense scan, then golden section around the
/// best sample. Returns (argmax, max).
fn maximize<F>(mut obj: F) -> Result<(f64, f64)>
where
    F: FnMut(f64) -> Result<f64>,
{
    let node = |k: usize| FRAC_PI_2 * k as f64 / SCAN_POINTS as f64;
    let mut best = (0, f64::NEG_INFINITY);
    for k in 0..=SCAN_POINTS {
        let v = obj(node(k))?;
        if v > best.1 {
            best = (k, v);
        }
    }
    let mut a = node(best.0.saturating_sub(1));
    let mut b = node((best.0 + 1).min(SCAN_POINTS));
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut x1 = b - inv_phi * (b - a);
    let mut x2 = a + inv_phi * (b - a);
    let mut f1 = obj(x1)?;
    let mut f2 = obj(x2)?;
    while b - a > GOLDEN_TOL {
        if f1 < f2 {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = obj(x2)?;
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = obj(x1)?;
        }
    }
    let (x, v) = if f1 > f2 { (x1, f1) } else { (x2, f2) };
    if v >= best.1 {
        Ok((x, v))
    } else {
        Ok((node(best.0), best.1))
    }
}

fn check_beta(beta: f64, lo: f64, label: &str) -> Result<()> {
    if !(beta >= lo - 1e-12 && beta <= TWO_PI + 1e-12) {
        return Err(HardyError::Domain(format!("{label} needs β ∈ [{lo}, 2π], got {beta}")));
    }
    Ok(())
}

/// γ*_β for β ∈ [π, 2π], plus γ**_β when β ≥ β_cr.
pub fn gamma_star(beta: f64) -> Result<CriticalAngles> {
    check_beta(beta, PI, "γ*")?;
    let prof = SectorProfile::shared(beta.clamp(PI, TWO_PI))?;
    let alpha = prof.alpha();
    let (argmax, m) = maximize(|th| Ok(objective(prof.g(th)?, alpha, th)))?;
    let gss = if prof.beta() >= beta_critical() { Some(gamma_star_star(prof.beta())?) } else { None };
    Ok(CriticalAngles {
        beta: prof.beta(),
        gamma_star: 2.0 * (1.0 / m).atan(),
        gamma_star_star: gss,
        argmax_theta: argmax,
    })
}

/// γ**_β for β ∈ [β_cr, 2π], from the polynomial ḡ.
pub fn gamma_star_star(beta: f64) -> Result<f64> {
    check_beta(beta, beta_critical(), "γ**")?;
    let prof = SectorProfile::shared(beta.clamp(beta_critical(), TWO_PI))?;
    let a = prof.alpha();
    let (_, m) = maximize(|th| Ok(objective(g_upper_bound(th, a)?, a, th)))?;
    Ok(2.0 * (1.0 / m).atan())
}

/// g(θ)cos(θ + γ/2) + α cos(γ/2); non-negative on [0, π/2] iff γ ≤ γ*_β.
pub fn cap_form(profile: &SectorProfile, theta: f64, gamma: f64) -> Result<f64> {
    Ok(profile.g(theta)? * (theta + gamma / 2.0).cos() + profile.alpha() * (gamma / 2.0).cos())
}
