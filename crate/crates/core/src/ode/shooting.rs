//! Shooting for the sector constant, independent of the transcendental
//! equation: integrate −ψ″ = cVψ from the vertex series and adjust c until
//! ψ′(β/2) = 0.

use std::f64::consts::{FRAC_PI_2, PI};

use serde::{Deserialize, Serialize};

use crate::error::{HardyError, Result};
use crate::ode::rk::{Integrator, Tolerance};
use crate::roots;
use crate::sector::{alpha_from_c, HardySolution, Method, TWO_PI};

/// Launch point of the vertex series.
pub const THETA0: f64 = 1e-6;
const SCAN_STEP: f64 = 0.0125;
const C_MIN: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ShootingResult {
    pub beta: f64,
    pub c_estimate: f64,
    /// ψ′/ψ at β/2 for the converged shot.
    pub terminal_derivative: f64,
    pub steps: usize,
    /// Smallest ψ seen along the converged shot, in units of ψ(θ₀).
    pub min_psi: f64,
}

impl ShootingResult {
    pub fn to_solution(&self) -> HardySolution {
        HardySolution {
            beta: self.beta,
            c: self.c_estimate,
            alpha: alpha_from_c(self.c_estimate),
            method: Method::Shooting,
            residual: self.terminal_derivative.abs(),
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Shot {
    psi: f64,
    dpsi: f64,
    steps: usize,
    min_psi: f64,
}

fn shoot(beta: f64, c: f64, tol: Tolerance) -> Result<Shot> {
    let a = alpha_from_c(c);
    let a2 = -a * (1.0 - a) / (6.0 * (1.0 + 2.0 * a));
    let t0 = THETA0;
    // ψ scaled by θ₀^{-α}
    let y0 = [1.0 + a2 * t0 * t0, (a / t0) * (1.0 + a2 * t0 * t0) + 2.0 * a2 * t0];
    let mut inner = |th: f64, y: &[f64; 2]| [y[1], -c * y[0] / th.sin().powi(2)];
    let mut outer = |_th: f64, y: &[f64; 2]| [y[1], -c * y[0]];
    let mut it = Integrator::new(tol);
    let mut min_psi = y0[0];
    let mut obs = |_t: f64, y: &[f64; 2]| min_psi = min_psi.min(y[0]);
    let y = it.run(&mut inner, t0, y0, FRAC_PI_2, &mut obs)?;
    let y = it.run(&mut outer, FRAC_PI_2, y, beta / 2.0, &mut obs)?;
    Ok(Shot { psi: y[0], dpsi: y[1], steps: it.stats.accepted, min_psi })
}

/// ψ′(β/2) rescaled by (θ₀/(β/2))^α, which keeps the miss function of c on
/// a comparable scale across trial constants.
fn miss(beta: f64, c: f64, tol: Tolerance) -> Result<f64> {
    let s = shoot(beta, c, tol)?;
    Ok(s.dpsi * (THETA0 / (beta / 2.0)).powf(alpha_from_c(c)))
}

/// Largest c ∈ (0, 1/4] whose shot satisfies ψ′(β/2) = 0.
pub fn shoot_c(beta: f64) -> Result<ShootingResult> {
    shoot_c_with(beta, Tolerance::default())
}

pub fn shoot_c_with(beta: f64, tol: Tolerance) -> Result<ShootingResult> {
    if !(beta > PI && beta <= TWO_PI + 1e-12) {
        return Err(HardyError::Domain(format!("shooting needs β ∈ (π, 2π], got {beta}")));
    }
    let beta = beta.min(TWO_PI);
    let mut hi = 0.25;
    let mut g_hi = miss(beta, hi, tol)?;
    let c = if g_hi == 0.0 {
        hi
    } else {
        loop {
            let lo = (hi - SCAN_STEP).max(C_MIN);
            let g_lo = miss(beta, lo, tol)?;
            if g_lo.signum() != g_hi.signum() {
                break roots::bracketed(|c| miss(beta, c, tol), lo, hi, 1e-14)?.x;
            }
            if lo <= C_MIN {
                return Err(HardyError::BracketFailure { lo: C_MIN, hi: 0.25 });
            }
            hi = lo;
            g_hi = g_lo;
        }
    };
    let s = shoot(beta, c, tol)?;
    Ok(ShootingResult { beta, c_estimate: c, terminal_derivative: s.dpsi / s.psi, steps: s.steps, min_psi: s.min_psi })
}
