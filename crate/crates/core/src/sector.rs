//! Hardy constant of an infinite sector and its angular eigenfunction.
//!
//! For an opening β ∈ (π, 2π] the constant is 1/4 up to the critical opening
//! β_cr and decreases below it afterwards. Everything here is expressed
//! through the angular profile ψ on (0, β) and the two logarithmic
//! derivatives `f = ψ'/ψ` and `g = f·sinθ`.

use std::collections::HashMap;
use std::f64::consts::{FRAC_PI_2, PI, SQRT_2};
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{HardyError, Result};
use crate::ode::rk::{Integrator, Tolerance};
use crate::roots;
use crate::specfun::{gamma, hyp2f1, HypParams};

pub const TWO_PI: f64 = 2.0 * PI;

/// Below this θ the logarithmic derivative is taken from the power series.
pub const SERIES_SWITCH: f64 = 1e-3;

const ANGLE_SLACK: f64 = 1e-12;
const RICCATI_NODES: usize = 2000;
const RICCATI_THETA_MIN: f64 = 1e-12;

/// 2·(Γ((3+s)/4) / Γ((1+s)/4))².
pub fn gamma_ratio_rhs(s: f64) -> Result<f64> {
    let r = gamma((3.0 + s) / 4.0)? / gamma((1.0 + s) / 4.0)?;
    Ok(2.0 * r * r)
}

/// Mismatch of the equation fixing c for an opening β:
/// √c·tan(√c(β−π)/2) − 2(Γ((3+s)/4)/Γ((1+s)/4))², s = √(1−4c).
pub fn tans1_residual(beta: f64, c: f64) -> Result<f64> {
    if !(c > 0.0 && c <= 0.25) {
        return Err(HardyError::Domain(format!("c must lie in (0, 1/4], got {c}")));
    }
    let s = (1.0 - 4.0 * c).max(0.0).sqrt();
    let rc = c.sqrt();
    Ok(rc * (rc * (beta - PI) / 2.0).tan() - gamma_ratio_rhs(s)?)
}

/// The critical opening β_cr: tan((β−π)/4) = 4(Γ(3/4)/Γ(1/4))².
pub fn beta_critical() -> f64 {
    static BCR: OnceLock<f64> = OnceLock::new();
    *BCR.get_or_init(|| {
        let rhs = 2.0 * gamma_ratio_rhs(0.0).expect("gamma at 1/4, 3/4");
        roots::bracketed(|b| Ok(((b - PI) / 4.0).tan() - rhs), PI + 1e-9, TWO_PI, 1e-14)
            .expect("tan is monotone on the bracket")
            .x
    })
}

/// Largest root of α(1−α) = c.
pub fn alpha_from_c(c: f64) -> f64 {
    0.5 * (1.0 + (1.0 - 4.0 * c).max(0.0).sqrt())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    ClosedForm,
    Shooting,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HardySolution {
    pub beta: f64,
    pub c: f64,
    pub alpha: f64,
    pub method: Method,
    pub residual: f64,
}

impl HardySolution {
    pub fn is_subcritical(&self) -> bool {
        self.beta < beta_critical()
    }
}

fn check_opening(beta: f64, lo_open: bool) -> Result<f64> {
    let ok_lo = if lo_open { beta > PI } else { beta >= PI - ANGLE_SLACK };
    if !(ok_lo && beta <= TWO_PI + ANGLE_SLACK) {
        let lo = if lo_open { "(" } else { "[" };
        return Err(HardyError::Domain(format!("opening must lie in {lo}π, 2π], got {beta}")));
    }
    Ok(beta.clamp(PI, TWO_PI))
}

/// c_β from the transcendental equation, 1/4 up to β_cr.
pub fn solve_c_beta(beta: f64) -> Result<HardySolution> {
    let beta = check_opening(beta, true)?;
    closed_solution(beta)
}

/// c_β on the closed range [π, 2π]; β = π is the half-plane.
pub fn sector_constant(beta: f64) -> Result<HardySolution> {
    closed_solution(check_opening(beta, false)?)
}

fn closed_solution(beta: f64) -> Result<HardySolution> {
    if beta <= beta_critical() {
        return Ok(HardySolution { beta, c: 0.25, alpha: 0.5, method: Method::ClosedForm, residual: 0.0 });
    }
    let lo = 1e-6;
    let hi = 0.25 - 1e-12;
    let root = match roots::bracketed(|c| tans1_residual(beta, c), lo, hi, 1e-15) {
        Ok(r) => r,
        // just above β_cr the root sits within the excluded sliver below 1/4
        Err(HardyError::BracketFailure { .. }) => {
            roots::Root { x: 0.25, fx: tans1_residual(beta, 0.25)?, iterations: 0 }
        }
        Err(e) => return Err(e),
    };
    let c = root.x;
    Ok(HardySolution {
        beta,
        c,
        alpha: alpha_from_c(c),
        method: Method::ClosedForm,
        residual: tans1_residual(beta, c)?.abs(),
    })
}

/// V(θ) for the sector of opening β.
pub fn potential_v(theta: f64, beta: f64) -> Result<f64> {
    if !(theta > 0.0 && theta < beta) {
        return Err(HardyError::Domain(format!("potential needs 0 < θ < β, got θ = {theta}, β = {beta}")));
    }
    Ok(if theta < FRAC_PI_2 {
        1.0 / theta.sin().powi(2)
    } else if theta <= beta - FRAC_PI_2 {
        1.0
    } else {
        1.0 / (beta - theta).sin().powi(2)
    })
}

/// Coefficients of ψ = θ^α (a0 + a1 θ + a2 θ² + …) at the vertex.
pub fn series_coefficients(sol: &HardySolution) -> (f64, f64, f64) {
    let a = sol.alpha;
    (1.0, 0.0, -a * (1.0 - a) / (6.0 * (1.0 + 2.0 * a)))
}

fn hyp_half(alpha: f64, t: f64) -> Result<f64> {
    hyp2f1(HypParams::new(0.5, 0.5, alpha + 0.5, t))
}

fn hyp_half_dz(alpha: f64, t: f64) -> Result<f64> {
    Ok(hyp2f1(HypParams::new(1.5, 1.5, alpha + 1.5, t))? / (4.0 * (alpha + 0.5)))
}

/// g on (0, π/2] from the hypergeometric representation of ψ.
fn g_closed(theta: f64, alpha: f64) -> Result<f64> {
    let t = (theta / 2.0).sin().powi(2);
    let ratio = hyp_half_dz(alpha, t)? / hyp_half(alpha, t)?;
    let ch = (theta / 2.0).cos().powi(2);
    Ok(alpha * ch - (1.0 - alpha) * t + 0.5 * theta.sin().powi(2) * ratio)
}

/// Right-hand side of the Riccati equation for g in x = ln θ.
pub(crate) fn riccati_g_rhs(x: f64, g: f64, c: f64) -> f64 {
    let th = x.exp();
    let ratio = if th < 1e-8 { 1.0 } else { th / th.sin() };
    -ratio * (g * g - th.cos() * g + c)
}

#[derive(Debug)]
struct RiccatiTable {
    xs: Vec<f64>,
    gs: Vec<f64>,
}

impl RiccatiTable {
    fn build(beta: f64) -> Result<Self> {
        let x_top = FRAC_PI_2.ln();
        let x_bot = RICCATI_THETA_MIN.ln();
        let g_top = 0.5 * ((beta - PI) / 4.0).tan();
        let mut xs = Vec::with_capacity(RICCATI_NODES + 1);
        let mut gs = Vec::with_capacity(RICCATI_NODES + 1);
        xs.push(x_top);
        gs.push(g_top);
        let mut it = Integrator::new(Tolerance::default());
        let mut rhs = |x: f64, y: &[f64; 1]| [riccati_g_rhs(x, y[0], 0.25)];
        let mut y = [g_top];
        for k in 1..=RICCATI_NODES {
            let x = x_top + (x_bot - x_top) * k as f64 / RICCATI_NODES as f64;
            y = it.advance(&mut rhs, *xs.last().unwrap(), y, x)?;
            xs.push(x);
            gs.push(y[0]);
        }
        Ok(RiccatiTable { xs, gs })
    }

    fn eval(&self, theta: f64) -> Result<f64> {
        let x = theta.ln();
        let n = self.xs.len() - 1;
        let step = (self.xs[n] - self.xs[0]) / n as f64;
        let k = ((x - self.xs[0]) / step).round().clamp(0.0, n as f64) as usize;
        if self.xs[k] == x {
            return Ok(self.gs[k]);
        }
        let mut it = Integrator::new(Tolerance::default());
        let mut rhs = |x: f64, y: &[f64; 1]| [riccati_g_rhs(x, y[0], 0.25)];
        Ok(it.advance(&mut rhs, self.xs[k], [self.gs[k]], x)?[0])
    }
}

#[derive(Debug)]
enum GBranch {
    Closed,
    Riccati(RiccatiTable),
}

/// A sector's constant together with an evaluator for f and g.
///
/// Openings below β_cr have no closed form for g; their g comes from the
/// Riccati equation integrated backward from θ = π/2.
#[derive(Debug)]
pub struct SectorProfile {
    pub sol: HardySolution,
    branch: GBranch,
}

impl SectorProfile {
    /// Accepts β ∈ [π, 2π].
    pub fn new(beta: f64) -> Result<Self> {
        let beta = check_opening(beta, false)?;
        let sol = closed_solution(beta)?;
        let branch =
            if beta >= beta_critical() { GBranch::Closed } else { GBranch::Riccati(RiccatiTable::build(beta)?) };
        Ok(SectorProfile { sol, branch })
    }

    /// Process-wide cached profile for β.
    pub fn shared(beta: f64) -> Result<Arc<SectorProfile>> {
        static CACHE: OnceLock<Mutex<HashMap<u64, Arc<SectorProfile>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        let key = beta.to_bits();
        if let Some(p) = cache.lock().unwrap().get(&key) {
            return Ok(p.clone());
        }
        let p = Arc::new(SectorProfile::new(beta)?);
        let mut guard = cache.lock().unwrap();
        if guard.len() >= 512 {
            guard.clear();
        }
        guard.insert(key, p.clone());
        Ok(p)
    }

    pub fn beta(&self) -> f64 {
        self.sol.beta
    }

    pub fn alpha(&self) -> f64 {
        self.sol.alpha
    }

    pub fn c(&self) -> f64 {
        self.sol.c
    }

    pub fn is_closed_form(&self) -> bool {
        matches!(self.branch, GBranch::Closed)
    }

    /// g(θ) on [0, π/2]; g(0) is the limit α.
    pub fn g(&self, theta: f64) -> Result<f64> {
        if !(theta >= 0.0 && theta <= FRAC_PI_2 + ANGLE_SLACK) {
            return Err(HardyError::Domain(format!("g is defined on (0, π/2], got θ = {theta}")));
        }
        let theta = theta.min(FRAC_PI_2);
        if theta == 0.0 {
            return Ok(self.sol.alpha);
        }
        match &self.branch {
            GBranch::Closed => g_closed(theta, self.sol.alpha),
            GBranch::Riccati(tab) => tab.eval(theta),
        }
    }

    /// f = ψ'/ψ on (0, β).
    pub fn f(&self, theta: f64) -> Result<f64> {
        let beta = self.sol.beta;
        if !(theta > 0.0 && theta < beta) {
            return Err(HardyError::Domain(format!("f is defined on (0, β), got θ = {theta}")));
        }
        if theta > beta - FRAC_PI_2 {
            return Ok(-self.f(beta - theta)?);
        }
        if theta >= FRAC_PI_2 {
            return Ok(self.f_middle(theta));
        }
        if theta < SERIES_SWITCH && self.is_closed_form() {
            let (_, _, a2) = series_coefficients(&self.sol);
            return Ok(self.sol.alpha / theta + 2.0 * a2 * theta / (1.0 + a2 * theta * theta));
        }
        Ok(self.g(theta)? / theta.sin())
    }

    /// √c·tan(√c(β/2 − θ)), the middle-range form of f, at any θ where the
    /// tangent is finite.
    pub fn f_middle(&self, theta: f64) -> f64 {
        let rc = self.sol.c.sqrt();
        rc * (rc * (self.sol.beta / 2.0 - theta)).tan()
    }

    /// ψ on (0, β/2], normalized so that ψ(β/2) = 1. Needs β ≥ β_cr.
    pub fn psi(&self, theta: f64) -> Result<f64> {
        self.psi_checked(theta)
    }

    /// ψ′ = f·ψ on (0, β/2].
    pub fn dpsi(&self, theta: f64) -> Result<f64> {
        Ok(self.psi_checked(theta)? * self.f(theta)?)
    }

    fn psi_checked(&self, theta: f64) -> Result<f64> {
        let beta = self.sol.beta;
        if !self.is_closed_form() {
            return Err(HardyError::Domain(format!("closed-form ψ needs β ≥ β_cr, got β = {beta}")));
        }
        if !(theta > 0.0 && theta <= beta / 2.0 + ANGLE_SLACK) {
            return Err(HardyError::Domain(format!("ψ is defined on (0, β/2], got θ = {theta}")));
        }
        let rc = self.sol.c.sqrt();
        if theta > FRAC_PI_2 {
            return Ok((rc * (beta / 2.0 - theta)).cos());
        }
        let a = self.sol.alpha;
        let t = (theta / 2.0).sin().powi(2);
        let amp = SQRT_2 * (rc * (beta - PI) / 2.0).cos() / hyp_half(a, 0.5)?;
        Ok(amp * (theta / 2.0).sin().powf(a) * (theta / 2.0).cos().powf(1.0 - a) * hyp_half(a, t)?)
    }

    /// |f(π/2⁻) − f(π/2⁺)|, the hypergeometric branch against the cosine branch.
    pub fn junction_mismatch(&self) -> Result<f64> {
        let left = match &self.branch {
            GBranch::Closed => g_closed(FRAC_PI_2, self.sol.alpha)?,
            GBranch::Riccati(tab) => tab.eval(FRAC_PI_2)?,
        };
        Ok((left - self.f_middle(FRAC_PI_2)).abs())
    }
}

/// ψ on (0, β/2] for a solution with β ≥ β_cr.
pub fn psi(theta: f64, sol: &HardySolution) -> Result<f64> {
    SectorProfile::shared(sol.beta)?.psi(theta)
}

pub fn dpsi(theta: f64, sol: &HardySolution) -> Result<f64> {
    SectorProfile::shared(sol.beta)?.dpsi(theta)
}

/// f = ψ'/ψ on (0, β).
pub fn f_func(theta: f64, sol: &HardySolution) -> Result<f64> {
    SectorProfile::shared(sol.beta)?.f(theta)
}

/// g = f·sinθ on (0, π/2] for an opening β ∈ [π, 2π].
pub fn g_func(theta: f64, beta: f64) -> Result<f64> {
    if !(theta > 0.0) {
        return Err(HardyError::Domain(format!("g is defined on (0, π/2], got θ = {theta}")));
    }
    SectorProfile::shared(beta)?.g(theta)
}

/// Samples of ψ and ψ′ on (0, β/2].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EigenProfile {
    pub beta: f64,
    pub grid: Vec<f64>,
    pub psi: Vec<f64>,
    pub dpsi: Vec<f64>,
    pub series_a2: f64,
}

/// ψ, ψ′ at θ_k = k·β/(2n), k = 1..=n.
pub fn eigen_profile(sol: &HardySolution, n: usize) -> Result<EigenProfile> {
    if n == 0 {
        return Err(HardyError::Domain("eigen profile needs at least one sample".into()));
    }
    let prof = SectorProfile::shared(sol.beta)?;
    let mut grid = Vec::with_capacity(n);
    let mut p = Vec::with_capacity(n);
    let mut dp = Vec::with_capacity(n);
    for k in 1..=n {
        let th = sol.beta / 2.0 * k as f64 / n as f64;
        grid.push(th);
        p.push(prof.psi(th)?);
        dp.push(prof.dpsi(th)?);
    }
    Ok(EigenProfile { beta: sol.beta, grid, psi: p, dpsi: dp, series_a2: series_coefficients(sol).2 })
}

/// f(θ)cos(θ+γ) + α(1 + sin(θ+γ)), with f continued by its tangent form on
/// [π/2, 3π/2 − γ].
pub fn quad10_form(profile: &SectorProfile, theta: f64, gamma: f64) -> f64 {
    let f = profile.f_middle(theta);
    f * (theta + gamma).cos() + profile.alpha() * (1.0 + (theta + gamma).sin())
}

/// f′ + f² + cV, with f′ from a five-point central difference.
pub fn riccati_residual_f(profile: &SectorProfile, theta: f64) -> Result<f64> {
    let h = 1e-3 * theta.min(profile.beta() - theta).min(1.0);
    let f = |t: f64| profile.f(t);
    let fd = (8.0 * (f(theta + h)? - f(theta - h)?) - (f(theta + 2.0 * h)? - f(theta - 2.0 * h)?)) / (12.0 * h);
    let f = profile.f(theta)?;
    Ok(fd + f * f + profile.c() * potential_v(theta, profile.beta())?)
}

/// g′ + (g² − cosθ·g + c)/sinθ by central differences.
pub fn riccati_residual_g(profile: &SectorProfile, theta: f64) -> Result<f64> {
    let h = 1e-5 * theta.min(1.0);
    let hi = (theta + h).min(FRAC_PI_2);
    let lo = hi - 2.0 * h;
    let mid = 0.5 * (hi + lo);
    let fd = (profile.g(hi)? - profile.g(lo)?) / (hi - lo);
    let g = profile.g(mid)?;
    Ok(fd + (g * g - mid.cos() * g + profile.c()) / mid.sin())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn critical_opening_matches_closed_form() {
        let r = 4.0 * (gamma(0.75).unwrap() / gamma(0.25).unwrap()).powi(2);
        let closed = PI + 4.0 * r.atan();
        assert!((beta_critical() - closed).abs() < 1e-12);
        assert!((beta_critical() / PI - 1.546).abs() < 1e-3);
        // (tans1) at c = 1/4 reduces to (tans2)
        assert!(tans1_residual(beta_critical(), 0.25).unwrap().abs() < 1e-10);
    }

    #[test]
    fn slit_plane_constant() {
        let s = solve_c_beta(TWO_PI).unwrap();
        assert!((s.c - 0.2054).abs() < 1e-3);
        assert!((s.c - 0.205_358_222_6).abs() < 1e-9);
        assert!((s.alpha * (1.0 - s.alpha) - s.c).abs() < 1e-12);
        assert!(s.residual < 1e-12);
    }

    #[test]
    fn subcritical_constant_is_quarter() {
        let s = solve_c_beta(1.2 * PI).unwrap();
        assert_eq!(s.c, 0.25);
        assert_eq!(s.alpha, 0.5);
        assert_eq!(solve_c_beta(beta_critical()).unwrap().c, 0.25);
    }

    #[test]
    fn openings_outside_range_are_rejected() {
        assert!(matches!(solve_c_beta(PI), Err(HardyError::Domain(_))));
        assert!(solve_c_beta(2.1 * PI).is_err());
        assert!(SectorProfile::new(PI).is_ok());
    }

    #[test]
    fn constant_is_monotone_in_opening() {
        let mut prev = f64::INFINITY;
        for k in 1..=100 {
            let b = PI + PI * k as f64 / 100.0;
            let c = solve_c_beta(b).unwrap().c;
            assert!(c <= prev + 1e-15);
            prev = c;
        }
    }

    #[test]
    fn potential_branches() {
        assert!((potential_v(PI / 4.0, 1.5 * PI).unwrap() - 2.0).abs() < 1e-14);
        assert_eq!(potential_v(PI, TWO_PI).unwrap(), 1.0);
        for b in [1.5 * PI, 1.8 * PI, TWO_PI] {
            assert!((potential_v(b - PI / 4.0, b).unwrap() - 2.0).abs() < 1e-12);
        }
        assert_eq!(potential_v(FRAC_PI_2, 1.7 * PI).unwrap(), 1.0);
        assert!(potential_v(0.0, PI).is_err());
        assert!(potential_v(PI, PI).is_err());
    }

    #[test]
    fn series_coefficient_values() {
        let s = solve_c_beta(1.2 * PI).unwrap();
        let (a0, a1, a2) = series_coefficients(&s);
        assert_eq!((a0, a1), (1.0, 0.0));
        assert!((a2 + 1.0 / 48.0).abs() < 1e-15);
    }

    #[test]
    fn series_residual_is_high_order() {
        // −ψ″ − cVψ for ψ = θ^α(1 + a2 θ²), scaled by θ^{-α}
        let s = solve_c_beta(TWO_PI).unwrap();
        let (_, _, a2) = series_coefficients(&s);
        let a = s.alpha;
        let res = |th: f64| {
            let d2 = a * (a - 1.0) / (th * th) + a2 * (a + 2.0) * (a + 1.0);
            let v = 1.0 / th.sin().powi(2);
            d2 + s.c * v * (1.0 + a2 * th * th)
        };
        for th in [1e-2, 5e-3, 2.5e-3] {
            assert!(res(th).abs() < th.powf(1.0));
        }
        let ratio = res(2e-2) / res(1e-2);
        assert!((ratio - 4.0).abs() < 0.1, "ratio {ratio}");
    }

    #[test]
    fn psi_normalization_and_continuity() {
        for b in [beta_critical(), 1.7 * PI, TWO_PI] {
            let s = solve_c_beta(b).unwrap();
            let p = SectorProfile::new(b).unwrap();
            assert!((p.psi(b / 2.0).unwrap() - 1.0).abs() < 1e-14);
            let left = p.psi(FRAC_PI_2).unwrap();
            let right = (s.c.sqrt() * (b - PI) / 2.0).cos();
            assert!((left - right).abs() < 1e-10);
            assert!(p.psi(1e-8).unwrap() < 1e-4);
            assert!(p.junction_mismatch().unwrap() < 1e-8);
        }
        let p = SectorProfile::new(1.2 * PI).unwrap();
        assert!(matches!(p.psi(1.0), Err(HardyError::Domain(_))));
        let p = SectorProfile::new(TWO_PI).unwrap();
        assert!(p.psi(1.01 * PI).is_err());
    }

    #[test]
    fn f_at_anchor_points() {
        let s = solve_c_beta(1.8 * PI).unwrap();
        let p = SectorProfile::new(1.8 * PI).unwrap();
        assert!(p.f(0.9 * PI).unwrap().abs() < 1e-14);
        let want = s.c.sqrt() * (s.c.sqrt() * 0.8 * PI / 2.0).tan();
        assert!((p.f(FRAC_PI_2).unwrap() - want).abs() < 1e-12);
        assert!((1e-4 * p.f(1e-4).unwrap() - s.alpha).abs() < 1e-3);
        // across the series switch
        let th = SERIES_SWITCH * (1.0 - 1e-12);
        let series = p.f(th).unwrap();
        let closed = p.g(th).unwrap() / th.sin();
        assert!(((series - closed) / closed).abs() < 1e-9, "{series} {closed}");
    }

    #[test]
    fn f_is_odd_about_midpoint() {
        let p = SectorProfile::new(1.9 * PI).unwrap();
        for th in [0.1, 1.0, 2.0, 2.9] {
            let a = p.f(th).unwrap();
            let b = p.f(1.9 * PI - th).unwrap();
            assert!((a + b).abs() < 1e-12);
        }
    }

    #[test]
    fn riccati_residuals_small() {
        for b in [1.2 * PI, beta_critical(), 1.75 * PI, TWO_PI] {
            let p = SectorProfile::new(b).unwrap();
            for k in 1..=200 {
                let th = b * k as f64 / 201.0;
                let r = riccati_residual_f(&p, th).unwrap();
                assert!(r.abs() < 1e-6, "β={b} θ={th} r={r}");
            }
            for k in 0..=100 {
                let th = 0.01 + (FRAC_PI_2 - 0.01) * k as f64 / 100.0;
                let r = riccati_residual_g(&p, th).unwrap();
                assert!(r.abs() < 1e-6, "β={b} θ={th} r={r}");
            }
        }
    }

    #[test]
    fn g_boundary_values() {
        assert!(g_func(FRAC_PI_2, PI).unwrap().abs() < 1e-15);
        let r = 4.0 * (gamma(0.75).unwrap() / gamma(0.25).unwrap()).powi(2);
        let g = g_func(FRAC_PI_2, beta_critical()).unwrap();
        assert!((g - r / 2.0).abs() < 1e-12);
        assert!((g - 0.228_473_290_5).abs() < 1e-9);
        // slow approach to 1/2 for subcritical openings
        let p = SectorProfile::new(1.3 * PI).unwrap();
        let g6 = p.g(1e-6).unwrap();
        let g12 = p.g(1e-12).unwrap();
        assert!(g12 < 0.5 && g6 < g12);
        assert!(0.5 - g12 < 0.05);
        assert_eq!(p.g(0.0).unwrap(), 0.5);
    }

    #[test]
    fn riccati_branch_meets_closed_form_at_critical_opening() {
        let closed = SectorProfile::new(beta_critical()).unwrap();
        let tab = RiccatiTable::build(beta_critical()).unwrap();
        for th in [1e-3, 0.1, 0.7, 1.2, FRAC_PI_2] {
            let a = closed.g(th).unwrap();
            let b = tab.eval(th).unwrap();
            assert!((a - b).abs() < 1e-8, "θ={th}: {a} vs {b}");
        }
    }

    #[test]
    fn g_increases_with_opening_below_critical() {
        let betas = [PI, 1.1 * PI, 1.3 * PI, 1.5 * PI, beta_critical()];
        let profiles: Vec<_> = betas.iter().map(|&b| SectorProfile::new(b).unwrap()).collect();
        for k in 1..=50 {
            let th = FRAC_PI_2 * k as f64 / 50.0;
            for w in profiles.windows(2) {
                assert!(w[0].g(th).unwrap() < w[1].g(th).unwrap());
            }
        }
    }

    #[test]
    fn quad10_inequality_on_sampled_parameters() {
        for b in [1.1 * PI, 1.3 * PI, beta_critical(), 1.7 * PI, TWO_PI] {
            let p = SectorProfile::new(b).unwrap();
            for gam in [0.0, (3.0 * PI - b) / 4.0, (3.0 * PI - b) / 2.0] {
                let hi = 1.5 * PI - gam;
                for k in 0..=400 {
                    let th = FRAC_PI_2 + (hi - FRAC_PI_2) * k as f64 / 400.0;
                    let v = quad10_form(&p, th, gam);
                    assert!(v >= -1e-10, "β={b} γ={gam} θ={th} v={v}");
                }
            }
        }
    }

    #[test]
    fn eigen_profile_positive() {
        let s = solve_c_beta(1.9 * PI).unwrap();
        let e = eigen_profile(&s, 100).unwrap();
        assert!(e.psi.iter().all(|&v| v > 0.0));
        assert!((e.psi.last().unwrap() - 1.0).abs() < 1e-14);
        assert!(e.dpsi.last().unwrap().abs() < 1e-12);
    }
}
