//! Hypothesis checks and numeric certificates for non-convex domains.
//!
//! A certificate is a list of named checks with margins. Hypothesis checks
//! decide the verdict; boundary-form checks sample the integrands the gluing
//! argument needs to be non-negative and turn a pass into `Inconclusive` if
//! any sampled value is negative.

pub mod forms;
pub mod geometry;

use std::f64::consts::{FRAC_PI_2, PI};

use serde::{Deserialize, Serialize};

use crate::angles::gamma_star;
use crate::error::{HardyError, Result};
use crate::sector::{solve_c_beta, SectorProfile, TWO_PI};

pub use forms::{boundary_form_samples, FormKind};
pub use geometry::{Point, Polygon};

/// Points per boundary-form grid.
pub const FORM_GRID: usize = 400;
/// Slack for flat stretches of a sampled polar graph.
pub const SLOPE_TOL: f64 = 1e-9;
const MIN_HALF_SAMPLES: usize = 3;

/// A domain description, angles in radians.
#[derive(Debug, Clone, PartialEq)]
pub enum DomainSpec {
    Sector {
        beta: f64,
    },
    SectorCapConvex {
        beta: f64,
        gamma_plus: f64,
        gamma_minus: f64,
        bounded: bool,
    },
    OneReflexPolygon {
        vertices: Vec<Point>,
    },
    Ebg {
        beta: f64,
        gamma: f64,
    },
    /// `r_samples` are (θ, r) pairs covering [0, β].
    Dbeta {
        beta: f64,
        r_samples: Vec<(f64, f64)>,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Verdict {
    Certified { c: f64 },
    ConditionFailed { name: String, margin: f64 },
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub satisfied: bool,
    pub margin: f64,
}

impl Check {
    fn hypothesis(name: impl Into<String>, margin: f64) -> Self {
        Check { name: name.into(), satisfied: margin >= 0.0, margin }
    }

    fn form(name: impl Into<String>, min_value: f64) -> Self {
        Check { name: name.into(), satisfied: min_value >= -forms::FORM_TOL, margin: min_value }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CertificateReport {
    pub verdict: Verdict,
    pub checks: Vec<Check>,
    pub constant_source: String,
}

impl CertificateReport {
    pub fn certified_constant(&self) -> Option<f64> {
        match self.verdict {
            Verdict::Certified { c } => Some(c),
            _ => None,
        }
    }
}

/// Verdict from hypothesis checks (which can fail the condition) and
/// certificate checks (which can only make the outcome inconclusive).
fn decide(c: f64, hypotheses: Vec<Check>, certificates: Vec<Check>, source: &str) -> CertificateReport {
    // worst failure; near-ties go to the earlier check so mirror-symmetric
    // inputs name the same condition regardless of rounding
    let mut failed: Option<Check> = None;
    for k in hypotheses.iter().filter(|k| !k.satisfied) {
        if failed.as_ref().map_or(true, |f| k.margin < f.margin - 1e-12) {
            failed = Some(k.clone());
        }
    }
    let verdict = if let Some(k) = failed {
        Verdict::ConditionFailed { name: k.name, margin: k.margin }
    } else if certificates.iter().all(|k| k.satisfied) {
        Verdict::Certified { c }
    } else {
        Verdict::Inconclusive
    };
    let mut checks = hypotheses;
    checks.extend(certificates);
    CertificateReport { verdict, checks, constant_source: source.to_string() }
}

/// Sector value c_β for β ∈ [π, 2π], with c_π = 1/4.
fn c_of(beta: f64) -> Result<f64> {
    Ok(SectorProfile::shared(beta)?.c())
}

fn cap_hypotheses(beta: f64, gamma_plus: f64, gamma_minus: f64) -> Result<Vec<Check>> {
    let gs = gamma_star(beta)?.gamma_star;
    let bound = gs.min((3.0 * PI - beta) / 2.0);
    Ok(vec![
        Check::hypothesis("cond_g1_gamma_plus", bound - gamma_plus),
        Check::hypothesis("cond_g1_gamma_minus", bound - gamma_minus),
    ])
}

/// Line-segment and parabola forms for each cap angle that is in range.
fn cap_certificates(beta: f64, caps: &[(&str, f64)]) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for &(label, gam) in caps {
        if !(gam >= 0.0 && gam <= PI) {
            continue;
        }
        for kind in [FormKind::LineSegment, FormKind::Parabola] {
            let m = forms::form_minimum(kind, beta, gam, FORM_GRID)?;
            out.push(Check::form(format!("form_{}_{label}", kind.name()), m));
        }
    }
    Ok(out)
}

/// Polygons with exactly one reflex vertex.
pub fn check_one_reflex_polygon(vertices: &[Point]) -> Result<CertificateReport> {
    let poly = Polygon::new(vertices.to_vec())?;
    let reflex = poly.reflex_vertices();
    if reflex.len() != 1 {
        return Err(HardyError::Shape(format!("expected exactly one reflex vertex, found {}", reflex.len())));
    }
    let n = poly.len();
    let i = reflex[0];
    let beta = poly.interior_angle(i).min(TWO_PI);
    let gamma_plus = poly.interior_angle((i + 1) % n);
    let gamma_minus = poly.interior_angle((i + n - 1) % n);
    let c = c_of(beta)?;
    let hyp = cap_hypotheses(beta, gamma_plus, gamma_minus)?;
    let cert = cap_certificates(beta, &[("gamma_plus", gamma_plus), ("gamma_minus", gamma_minus)])?;
    Ok(decide(c, hyp, cert, "one-reflex polygon: cap angles within min(γ*_β, (3π−β)/2)"))
}

/// A sector of opening β intersected with a convex set K.
pub fn check_sector_cap(beta: f64, gamma_plus: f64, gamma_minus: f64, bounded: bool) -> Result<CertificateReport> {
    if !(beta > PI && beta <= TWO_PI + 1e-12) {
        return Err(HardyError::Domain(format!("sector cap needs β ∈ (π, 2π], got {beta}")));
    }
    let c = solve_c_beta(beta)?.c;
    if !bounded {
        return Ok(decide(c, vec![], vec![], "unbounded convex cap not meeting the sector boundary"));
    }
    for (name, g) in [("gamma_plus", gamma_plus), ("gamma_minus", gamma_minus)] {
        if !(g > 0.0 && g < PI) {
            return Err(HardyError::Domain(format!("{name} must lie in (0, π), got {g}")));
        }
    }
    let hyp = cap_hypotheses(beta, gamma_plus, gamma_minus)?;
    let cert = cap_certificates(beta, &[("gamma_plus", gamma_plus), ("gamma_minus", gamma_minus)])?;
    Ok(decide(c, hyp, cert, "bounded convex cap: cap angles within min(γ*_β, (3π−β)/2)"))
}

/// Right-hand side of the two-reflex condition as printed: (2/c)·arccos(2√c).
pub fn oa_bound_stated(c: f64) -> f64 {
    2.0 / c * (2.0 * c.sqrt()).min(1.0).acos()
}

/// Two-reflex condition as the comparison argument delivers it:
/// c ≤ 1/4 − c·tan²(√c(β−γ)/2) ⟺ |β−γ| ≤ (2/√c)·arccos(2√c).
pub fn oa_bound(c: f64) -> f64 {
    2.0 / c.sqrt() * (2.0 * c.sqrt()).min(1.0).acos()
}

/// Case (ii) of the segment-and-two-halflines domain: the constant of the
/// sector formed by the halflines, if the opening difference is small enough.
pub fn ebg_two_reflex_constant(beta: f64, gamma: f64) -> Result<(f64, f64)> {
    let c = c_of(beta + gamma - PI)?;
    Ok((c, oa_bound(c) - (beta - gamma).abs()))
}

/// Segment OP with halflines at interior angles β (at O) and γ (at P).
pub fn check_ebg(beta: f64, gamma: f64) -> Result<CertificateReport> {
    let (beta, gamma) = if gamma > beta { (gamma, beta) } else { (beta, gamma) };
    if !(gamma > 0.0) {
        return Err(HardyError::Domain(format!("γ must be positive, got {gamma}")));
    }
    if beta + gamma > 3.0 * PI + 1e-12 {
        return Err(HardyError::Domain(format!("β + γ must not exceed 3π, got {}", beta + gamma)));
    }
    if !(beta >= PI && beta <= TWO_PI + 1e-12) {
        return Err(HardyError::Domain(format!("the larger angle must lie in [π, 2π], got {beta}")));
    }
    let beta = beta.min(TWO_PI);
    if gamma >= PI {
        let (c, margin) = ebg_two_reflex_constant(beta, gamma)?;
        let oa = Check::hypothesis("oa", margin);
        if oa.satisfied || gamma > PI {
            let mut r = decide(c, vec![], vec![oa.clone()], "two reflex angles: constant of the sector at β+γ−π");
            r.checks.push(Check {
                name: "oa_stated".into(),
                satisfied: oa_bound_stated(c) >= (beta - gamma).abs(),
                margin: oa_bound_stated(c) - (beta - gamma).abs(),
            });
            return Ok(r);
        }
        // γ = π with (oa) failing: fall through to the one-reflex case
    }
    let c = c_of(beta)?;
    let gamma = gamma.min(PI);
    let kinds: &[FormKind] = if gamma <= FRAC_PI_2 {
        &[FormKind::LineSegment, FormKind::Parabola, FormKind::HalfLine]
    } else {
        &[FormKind::TwoSided, FormKind::TwoSidedParabola, FormKind::Gamma3]
    };
    let mut cert = Vec::new();
    for &kind in kinds {
        match forms::form_minimum(kind, beta, gamma, FORM_GRID) {
            Ok(m) => cert.push(Check::form(format!("form_{}", kind.name()), m)),
            // the halfline piece is absent when β + γ ≥ 2π
            Err(HardyError::Range(_)) if matches!(kind, FormKind::HalfLine | FormKind::Gamma3) => {}
            Err(e) => return Err(e),
        }
    }
    if gamma > FRAC_PI_2 {
        let worst = (0..=FORM_GRID)
            .map(|k| forms::claim1_margin(FRAC_PI_2 * k as f64 / FORM_GRID as f64, gamma))
            .fold(f64::INFINITY, f64::min);
        cert.push(Check::form("claim_theta1", worst));
    }
    Ok(decide(c, vec![], cert, "one reflex angle: constant of the sector at β"))
}

/// Mixed problem: Dirichlet on two segments meeting at angle β, Neumann on a
/// polar graph r(θ).
pub fn check_dbeta(beta: f64, r_samples: &[(f64, f64)]) -> Result<CertificateReport> {
    if !(beta > PI && beta <= TWO_PI + 1e-12) {
        return Err(HardyError::Domain(format!("mixed domain needs β ∈ (π, 2π], got {beta}")));
    }
    validate_r_samples(beta, r_samples)?;
    let c = solve_c_beta(beta)?.c;
    let prof = SectorProfile::shared(beta.min(TWO_PI))?;
    let half = beta / 2.0;
    let mut worst_lower = f64::INFINITY;
    let mut worst_upper = f64::INFINITY;
    let mut worst_form = f64::INFINITY;
    for w in r_samples.windows(2) {
        let ((t0, r0), (t1, r1)) = (w[0], w[1]);
        let slope = (r1 - r0) / (t1 - t0);
        let mid = 0.5 * (t0 + t1);
        if mid <= half {
            worst_lower = worst_lower.min(SLOPE_TOL - slope);
        } else {
            worst_upper = worst_upper.min(slope + SLOPE_TOL);
        }
        if mid > 0.0 && mid < beta && (mid - half).abs() > 1e-12 {
            worst_form = worst_form.min(forms::neumann_arc_form(&prof, mid, slope)?);
        }
    }
    let hyp = vec![
        Check::hypothesis("r_nonincreasing_on_lower_half", worst_lower),
        Check::hypothesis("r_nondecreasing_on_upper_half", worst_upper),
    ];
    let cert = vec![Check::form("form_neumann_arc", worst_form)];
    let mut r = decide(c, hyp, cert, "mixed Dirichlet–Neumann: r monotone towards the bisector");
    // no conclusion is available when the sign pattern fails
    if let Verdict::ConditionFailed { .. } = r.verdict {
        r.verdict = Verdict::Inconclusive;
    }
    Ok(r)
}

pub(crate) fn validate_r_samples(beta: f64, r_samples: &[(f64, f64)]) -> Result<()> {
    let half = beta / 2.0;
    let lower = r_samples.iter().filter(|(t, _)| *t <= half).count();
    let upper = r_samples.iter().filter(|(t, _)| *t >= half).count();
    if lower < MIN_HALF_SAMPLES || upper < MIN_HALF_SAMPLES {
        return Err(HardyError::Sampling(format!(
            "need at least {MIN_HALF_SAMPLES} samples on each half of [0, β], got {lower} and {upper}"
        )));
    }
    if r_samples.windows(2).any(|w| !(w[1].0 > w[0].0)) {
        return Err(HardyError::Sampling("θ samples must be strictly increasing".into()));
    }
    if r_samples.iter().any(|(_, r)| !(*r > 0.0 && r.is_finite())) {
        return Err(HardyError::Sampling("r must be positive and finite".into()));
    }
    let (first, last) = (r_samples[0].0, r_samples[r_samples.len() - 1].0);
    if first.abs() > 1e-9 || (last - beta).abs() > 1e-9 {
        return Err(HardyError::Sampling(format!("samples must span [0, β], got [{first}, {last}]")));
    }
    Ok(())
}

/// Dispatches a domain to its checker.
pub fn certify(spec: &DomainSpec) -> Result<CertificateReport> {
    match spec {
        DomainSpec::Sector { beta } => {
            let c = solve_c_beta(*beta)?.c;
            Ok(decide(c, vec![], vec![], "sector"))
        }
        DomainSpec::SectorCapConvex { beta, gamma_plus, gamma_minus, bounded } => {
            check_sector_cap(*beta, *gamma_plus, *gamma_minus, *bounded)
        }
        DomainSpec::OneReflexPolygon { vertices } => check_one_reflex_polygon(vertices),
        DomainSpec::Ebg { beta, gamma } => check_ebg(*beta, *gamma),
        DomainSpec::Dbeta { beta, r_samples } => check_dbeta(*beta, r_samples),
    }
}

/// (θ, r) samples of r on [0, β] at n + 1 equally spaced angles.
pub fn sample_polar_graph<F: Fn(f64) -> f64>(beta: f64, n: usize, r: F) -> Vec<(f64, f64)> {
    (0..=n)
        .map(|k| {
            let t = beta * k as f64 / n as f64;
            (t, r(t))
        })
        .collect()
}
