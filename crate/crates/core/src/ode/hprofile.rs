//! The singular initial-value problem for h = g/α, the explicit α = 1/2
//! family, and the polynomial upper bound ḡ.

use std::f64::consts::{FRAC_PI_2, PI};

use serde::{Deserialize, Serialize};

use crate::error::{HardyError, Result};
use crate::ode::rk::{Integrator, Tolerance};
use crate::quad::adaptive_simpson;
use crate::specfun::{hyp2f1, HypParams};

/// Launch point of the series start for h.
pub const H_THETA0: f64 = 1e-4;
/// Samples per profile; the grid is kπ/400, k = 1..=200.
pub const GRID_POINTS: usize = 200;
const INNER_TOL: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HProfile {
    pub alpha: f64,
    pub grid: Vec<f64>,
    pub h: Vec<f64>,
    /// Family parameter, present only for α = 1/2.
    pub lambda: Option<f64>,
}

pub fn profile_grid() -> Vec<f64> {
    (1..=GRID_POINTS).map(|k| k as f64 * PI / 400.0).collect()
}

/// Two-term start h ≈ 1 − θ²/(2(2α+1)).
pub fn h_series_start(alpha: f64, theta: f64) -> f64 {
    1.0 - theta * theta / (2.0 * (2.0 * alpha + 1.0))
}

/// sinθ·h′ + αh² − cosθ·h + 1 − α for a given h, h′.
pub fn h_ode_residual(alpha: f64, theta: f64, h: f64, dh: f64) -> f64 {
    theta.sin() * dh + alpha * h * h - theta.cos() * h + 1.0 - alpha
}

fn h_rhs(alpha: f64, x: f64, h: f64) -> f64 {
    let th = x.exp();
    -(th / th.sin()) * (alpha * h * h - th.cos() * h + 1.0 - alpha)
}

/// Solves sinθ·h′ + αh² − cosθ·h + 1 − α = 0, h(0) = 1, forward to π/2.
pub fn solve_h(alpha: f64) -> Result<HProfile> {
    solve_h_with(alpha, Tolerance::default())
}

pub fn solve_h_with(alpha: f64, tol: Tolerance) -> Result<HProfile> {
    if !(alpha > 0.5 && alpha < 1.0) {
        return Err(HardyError::Domain(format!("solve_h needs α ∈ (1/2, 1), got {alpha}")));
    }
    let grid = profile_grid();
    let mut it = Integrator::new(tol);
    let mut rhs = |x: f64, y: &[f64; 1]| [h_rhs(alpha, x, y[0])];
    let mut x = H_THETA0.ln();
    let mut y = [h_series_start(alpha, H_THETA0)];
    let mut h = Vec::with_capacity(grid.len());
    for &th in &grid {
        let xt = th.ln();
        y = it.advance(&mut rhs, x, y, xt)?;
        x = xt;
        h.push(y[0]);
    }
    Ok(HProfile { alpha, grid, h, lambda: None })
}

fn f_half(t: f64) -> Result<f64> {
    hyp2f1(HypParams::new(0.5, 0.5, 1.0, t))
}

/// I(t) = ∫_t^{1/2} ds / (s(1−s)F(s)²), F = F(1/2,1/2;1;s).
///
/// The logarithmic part is integrated exactly; the remainder is smooth.
pub fn lambda_integral(t: f64) -> Result<f64> {
    if !(t > 0.0 && t <= 0.5 + 1e-12) {
        return Err(HardyError::Domain(format!("λ-integral needs t ∈ (0, 1/2], got {t}")));
    }
    let t = t.min(0.5);
    let rem = |s: f64| match f_half(s) {
        Ok(f) => (1.0 / (f * f) - 1.0) / (s * (1.0 - s)),
        Err(_) => f64::NAN,
    };
    // (1/F² − 1)/(s(1−s)) → −1/2 as s → 0
    let rem = |s: f64| if s < 1e-300 { -0.5 } else { rem(s) };
    let smooth = adaptive_simpson(rem, t, 0.5, INNER_TOL)?;
    Ok(-(t / (1.0 - t)).ln() + smooth)
}

/// Member λ of the α = 1/2 family at θ ∈ [0, π/2].
pub fn h_family_half_at(theta: f64, lambda: f64) -> Result<f64> {
    if !(lambda >= 0.0) {
        return Err(HardyError::Domain(format!("λ must be non-negative, got {lambda}")));
    }
    if !(theta >= 0.0 && theta <= FRAC_PI_2 + 1e-12) {
        return Err(HardyError::Domain(format!("θ must lie in [0, π/2], got {theta}")));
    }
    if theta == 0.0 {
        return Ok(1.0);
    }
    let t = (theta / 2.0).sin().powi(2);
    let f = f_half(t)?;
    let f3 = hyp2f1(HypParams::new(1.5, 1.5, 2.0, t.min(0.5)))?;
    let base = theta.cos() + theta.sin().powi(2) * f3 / (4.0 * f);
    if lambda == 0.0 {
        return Ok(base);
    }
    let i = lambda_integral(t)?;
    Ok(base - 4.0 * lambda / (f * f * (1.0 + lambda * i)))
}

/// The α = 1/2 family on the standard grid.
pub fn h_family_half(lambda: f64) -> Result<HProfile> {
    let grid = profile_grid();
    let h = grid.iter().map(|&th| h_family_half_at(th, lambda)).collect::<Result<Vec<_>>>()?;
    Ok(HProfile { alpha: 0.5, grid, h, lambda: Some(lambda) })
}

fn check_bound_args(theta: f64, a: f64) -> Result<()> {
    if !(a >= 0.5 && a < 1.0) {
        return Err(HardyError::Domain(format!("ḡ needs a ∈ [1/2, 1), got {a}")));
    }
    if !(theta >= 0.0 && theta <= FRAC_PI_2) {
        return Err(HardyError::Domain(format!("ḡ needs θ ∈ [0, π/2], got {theta}")));
    }
    Ok(())
}

fn gbar_coeffs(a: f64) -> (f64, f64) {
    let k2 = -a / (2.0 * (2.0 * a + 1.0));
    let k4 = a * (4.0 * a * a + 2.0 * a + 3.0) / (24.0 * (2.0 * a + 1.0) * (4.0 * a * a + 8.0 * a + 3.0));
    (k2, k4)
}

/// ḡ(θ) = a − aθ²/(2(2a+1)) + a(4a²+2a+3)θ⁴/(24(2a+1)(4a²+8a+3)).
pub fn g_upper_bound(theta: f64, a: f64) -> Result<f64> {
    check_bound_args(theta, a)?;
    let (k2, k4) = gbar_coeffs(a);
    let t2 = theta * theta;
    Ok(a + k2 * t2 + k4 * t2 * t2)
}

/// sinθ·ḡ′ + ḡ² − cosθ·ḡ + a(1−a); non-negative for an upper solution.
pub fn g_upper_residual(theta: f64, a: f64) -> Result<f64> {
    let g = g_upper_bound(theta, a)?;
    let (k2, k4) = gbar_coeffs(a);
    let t2 = theta * theta;
    let dg = 2.0 * k2 * theta + 4.0 * k4 * theta * t2;
    // ḡ² − ḡ + a(1−a) = (ḡ−a)(ḡ−1+a) and 1 − cosθ = 2sin²(θ/2) keep the
    // O(θ⁶) result free of cancellation against O(1) terms
    let delta = k2 * t2 + k4 * t2 * t2;
    let half = (theta / 2.0).sin();
    Ok(theta.sin() * dg + 2.0 * half * half * g + delta * (delta + 2.0 * a - 1.0))
}
