//! Boundary-form integrands along the equidistance curve.
//!
//! Each form is the normal flux of the gluing argument with its positive
//! 1/d, 1/r prefactor removed, so only its sign carries information. The
//! curve is parametrized by the polar angle θ seen from the reflex vertex.

use std::f64::consts::{FRAC_PI_2, PI};

use serde::{Deserialize, Serialize};

use crate::angles::cap_form;
use crate::error::{HardyError, Result};
use crate::sector::SectorProfile;

/// Grid values below this count as non-negative.
pub const FORM_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FormKind {
    /// Bisector of the cap angle γ, θ ∈ [0, π/2].
    LineSegment,
    /// Parabola equidistant from the vertex and the far line, θ ∈ [π/2, min(β−π/2, 3π/2−γ)].
    Parabola,
    /// Halfline equidistant from the two far lines, θ ∈ [β−π/2, (β+π−γ)/2); needs β+γ < 2π.
    HalfLine,
    /// Bisector with a second eigenfunction on the far side; γ ∈ [π/2, π].
    TwoSided,
    /// Parabola with a second eigenfunction on the far side; γ ∈ [π/2, π].
    TwoSidedParabola,
    /// Halfline with a second eigenfunction on the far side; γ ∈ [π/2, π], β+γ < 2π.
    Gamma3,
}

impl FormKind {
    pub const ALL: [FormKind; 6] = [
        FormKind::LineSegment,
        FormKind::Parabola,
        FormKind::HalfLine,
        FormKind::TwoSided,
        FormKind::TwoSidedParabola,
        FormKind::Gamma3,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            FormKind::LineSegment => "line_segment",
            FormKind::Parabola => "parabola",
            FormKind::HalfLine => "half_line",
            FormKind::TwoSided => "two_sided",
            FormKind::TwoSidedParabola => "two_sided_parabola",
            FormKind::Gamma3 => "gamma3",
        }
    }

    fn two_sided(&self) -> bool {
        matches!(self, FormKind::TwoSided | FormKind::TwoSidedParabola | FormKind::Gamma3)
    }
}

/// θ-interval of a form: (lo, hi, hi_included).
pub fn form_range(kind: FormKind, beta: f64, gamma: f64) -> Result<(f64, f64, bool)> {
    if !(beta >= PI - 1e-12 && beta <= 2.0 * PI + 1e-12) {
        return Err(HardyError::Range(format!("β must lie in [π, 2π], got {beta}")));
    }
    if !(gamma >= 0.0 && gamma <= PI + 1e-12) {
        return Err(HardyError::Range(format!("γ must lie in [0, π], got {gamma}")));
    }
    if kind.two_sided() && gamma < FRAC_PI_2 - 1e-12 {
        return Err(HardyError::Range(format!("{} needs γ ≥ π/2, got {gamma}", kind.name())));
    }
    let needs_halfline = matches!(kind, FormKind::HalfLine | FormKind::Gamma3);
    if needs_halfline && beta + gamma >= 2.0 * PI {
        return Err(HardyError::Range(format!("{} needs β + γ < 2π", kind.name())));
    }
    Ok(match kind {
        FormKind::LineSegment | FormKind::TwoSided => (0.0, FRAC_PI_2, true),
        FormKind::Parabola | FormKind::TwoSidedParabola => {
            let hi = (beta - FRAC_PI_2).min(1.5 * PI - gamma);
            (FRAC_PI_2, hi, true)
        }
        FormKind::HalfLine | FormKind::Gamma3 => (beta - FRAC_PI_2, (beta + PI - gamma) / 2.0, false),
    })
}

/// θ₁ on the bisector: cot θ₁ = −cosγ·cotθ + sinγ.
pub fn theta1_bisector(theta: f64, gamma: f64) -> f64 {
    theta.sin().atan2(-gamma.cos() * theta.cos() + gamma.sin() * theta.sin())
}

/// θ₁ on the parabola: cot θ₁ = −cos(θ+γ).
pub fn theta1_parabola(theta: f64, gamma: f64) -> f64 {
    1f64.atan2(-(theta + gamma).cos())
}

/// θ₁ on the halfline: tan θ₁ = −sin(β−θ)/cos(θ+γ).
pub fn theta1_halfline(theta: f64, beta: f64, gamma: f64) -> f64 {
    (beta - theta).sin().atan2(-(theta + gamma).cos())
}

/// θ₁ − (θ + γ − π) on the bisector.
pub fn claim1_margin(theta: f64, gamma: f64) -> f64 {
    theta1_bisector(theta, gamma) - (theta + gamma - PI)
}

/// f·sinθ on (0, β), which equals g on (0, π/2].
fn g_any(p: &SectorProfile, theta: f64) -> Result<f64> {
    if theta <= 0.0 {
        return Ok(p.alpha());
    }
    if theta <= FRAC_PI_2 {
        return p.g(theta);
    }
    Ok(p.f(theta)? * theta.sin())
}

/// Value of a form at one θ, after a range check.
pub fn sample_form(p: &SectorProfile, kind: FormKind, gamma: f64, theta: f64) -> Result<f64> {
    let beta = p.beta();
    let (lo, hi, closed) = form_range(kind, beta, gamma)?;
    let slack = 1e-12;
    let inside = theta >= lo - slack && (theta < hi || (closed && theta <= hi + slack));
    if !inside {
        let close = if closed { "]" } else { ")" };
        return Err(HardyError::Range(format!("θ = {theta} outside [{lo}, {hi}{close} for {}", kind.name())));
    }
    let theta = theta.clamp(lo, hi);
    let a = p.alpha();
    Ok(match kind {
        FormKind::LineSegment => cap_form(p, theta, gamma)?,
        FormKind::Parabola => p.f(theta)? * (theta + gamma).cos() + a * (1.0 + (theta + gamma).sin()),
        FormKind::HalfLine => {
            p.f(theta)? * ((beta - gamma) / 2.0 - theta).sin() + a * ((beta + gamma) / 2.0).sin() / (beta - theta).sin()
        }
        FormKind::TwoSided => {
            let t1 = theta1_bisector(theta, gamma);
            g_any(p, theta)? * (theta + gamma / 2.0).cos() + g_any(p, t1)? * (t1 - gamma / 2.0).cos()
        }
        FormKind::TwoSidedParabola => {
            let t1 = theta1_parabola(theta, gamma);
            p.f(theta)? * (theta + gamma).cos() - g_any(p, t1)? * ((t1 - theta - gamma).sin() - t1.cos())
        }
        FormKind::Gamma3 => {
            let t1 = theta1_halfline(theta, beta, gamma);
            p.f(theta)? * ((beta - gamma) / 2.0 - theta).sin()
                + g_any(p, t1)? * ((beta + gamma) / 2.0 - t1).sin() / (beta - theta).sin()
        }
    })
}

/// n evenly spaced θ over the form's range; half-open ranges stop short of
/// the open end.
pub fn form_grid(kind: FormKind, beta: f64, gamma: f64, n: usize) -> Result<Vec<f64>> {
    let (lo, hi, closed) = form_range(kind, beta, gamma)?;
    if n < 2 {
        return Err(HardyError::Range("a form grid needs at least 2 points".into()));
    }
    let div = if closed { (n - 1) as f64 } else { n as f64 };
    Ok((0..n).map(|k| lo + (hi - lo) * k as f64 / div).collect())
}

/// (θ, value) pairs of a form over a caller-supplied grid.
pub fn boundary_form_samples(kind: FormKind, beta: f64, gamma: f64, grid: &[f64]) -> Result<Vec<(f64, f64)>> {
    let p = SectorProfile::shared(beta)?;
    grid.iter().map(|&th| Ok((th, sample_form(&p, kind, gamma, th)?))).collect()
}

/// Minimum of a form over an n-point grid of its range.
pub fn form_minimum(kind: FormKind, beta: f64, gamma: f64, n: usize) -> Result<f64> {
    let grid = form_grid(kind, beta, gamma, n)?;
    let s = boundary_form_samples(kind, beta, gamma, &grid)?;
    Ok(s.iter().map(|(_, v)| *v).fold(f64::INFINITY, f64::min))
}

/// −r′(θ)·f(θ), the Neumann-arc flux with its positive prefactor removed.
pub fn neumann_arc_form(p: &SectorProfile, theta: f64, dr: f64) -> Result<f64> {
    Ok(-dr * p.f(theta)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::angles::gamma_star;
    use crate::sector::beta_critical;

    #[test]
    fn line_segment_with_zero_cap_is_positive() {
        for b in [1.2 * PI, 1.7 * PI, 2.0 * PI] {
            assert!(form_minimum(FormKind::LineSegment, b, 0.0, 400).unwrap() > 0.0);
        }
    }

    #[test]
    fn parabola_vanishes_at_degenerate_end() {
        let b = 2.0 * PI;
        let gam = 0.6 * PI;
        let p = SectorProfile::shared(b).unwrap();
        let v = sample_form(&p, FormKind::Parabola, gam, 1.5 * PI - gam).unwrap();
        assert!(v.abs() < 1e-12);
    }

    #[test]
    fn two_sided_certificate_at_critical_opening() {
        let m = form_minimum(FormKind::TwoSided, beta_critical(), 0.8 * PI, 400).unwrap();
        assert!(m >= -FORM_TOL);
    }

    #[test]
    fn claim_holds_on_bisector() {
        for gam in [0.6 * PI, 0.8 * PI, PI] {
            for k in 0..=400 {
                let th = FRAC_PI_2 * k as f64 / 400.0;
                assert!(claim1_margin(th, gam) >= -1e-12);
            }
        }
    }

    #[test]
    fn bisector_fixed_point() {
        for gam in [0.6 * PI, 0.9 * PI] {
            let th = FRAC_PI_2 - gam / 2.0;
            assert!((theta1_bisector(th, gam) - th).abs() < 1e-12);
        }
    }

    #[test]
    fn out_of_hypothesis_cap_goes_negative() {
        let g = gamma_star(2.0 * PI).unwrap().gamma_star;
        assert!(form_minimum(FormKind::LineSegment, 2.0 * PI, g + 0.05, 400).unwrap() < 0.0);
    }

    #[test]
    fn range_errors() {
        let p = SectorProfile::shared(1.8 * PI).unwrap();
        assert!(matches!(sample_form(&p, FormKind::LineSegment, 0.3, 2.0), Err(HardyError::Range(_))));
        assert!(matches!(form_range(FormKind::TwoSided, 1.8 * PI, 0.3), Err(HardyError::Range(_))));
        assert!(matches!(form_range(FormKind::HalfLine, 1.8 * PI, 0.5 * PI), Err(HardyError::Range(_))));
        let (lo, hi, closed) = form_range(FormKind::HalfLine, 1.2 * PI, 0.3 * PI).unwrap();
        assert!(!closed);
        assert!(sample_form(&SectorProfile::shared(1.2 * PI).unwrap(), FormKind::HalfLine, 0.3 * PI, hi).is_err());
        assert!(lo < hi);
    }
}
