//! Dormand–Prince 5(4) pair with PI step-size control.
//!
//! Only what the shooting and Riccati solvers in this crate need: fixed-size
//! states, integration in either direction, exact landing on the end point,
//! and a per-step observer.

use crate::error::{HardyError, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub rtol: f64,
    pub atol: f64,
    pub max_steps: usize,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance { rtol: 1e-10, atol: 1e-12, max_steps: 200_000 }
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Stats {
    pub accepted: usize,
    pub rejected: usize,
}

const C2: f64 = 1.0 / 5.0;
const C3: f64 = 3.0 / 10.0;
const C4: f64 = 4.0 / 5.0;
const C5: f64 = 8.0 / 9.0;

const A21: f64 = 1.0 / 5.0;
const A31: f64 = 3.0 / 40.0;
const A32: f64 = 9.0 / 40.0;
const A41: f64 = 44.0 / 45.0;
const A42: f64 = -56.0 / 15.0;
const A43: f64 = 32.0 / 9.0;
const A51: f64 = 19372.0 / 6561.0;
const A52: f64 = -25360.0 / 2187.0;
const A53: f64 = 64448.0 / 6561.0;
const A54: f64 = -212.0 / 729.0;
const A61: f64 = 9017.0 / 3168.0;
const A62: f64 = -355.0 / 33.0;
const A63: f64 = 46732.0 / 5247.0;
const A64: f64 = 49.0 / 176.0;
const A65: f64 = -5103.0 / 18656.0;
const A71: f64 = 35.0 / 384.0;
const A73: f64 = 500.0 / 1113.0;
const A74: f64 = 125.0 / 192.0;
const A75: f64 = -2187.0 / 6784.0;
const A76: f64 = 11.0 / 84.0;

const E1: f64 = 71.0 / 57600.0;
const E3: f64 = -71.0 / 16695.0;
const E4: f64 = 71.0 / 1920.0;
const E5: f64 = -17253.0 / 339200.0;
const E6: f64 = 22.0 / 525.0;
const E7: f64 = -1.0 / 40.0;

/// Relative size of the rounding error an accepted step is charged on top of
/// its truncation estimate. Tolerances below this can never be met, so they
/// end in a step collapse instead of a silent over-claim.
pub const ROUNDING_FLOOR: f64 = 5e-14;

const SAFETY: f64 = 0.9;
const EXP_ALPHA: f64 = 0.7 / 5.0;
const EXP_BETA: f64 = 0.4 / 5.0;

/// Adaptive integrator carrying its step-size estimate across calls, so that
/// a trajectory split at output points keeps a sensible step.
#[derive(Debug, Clone)]
pub struct Integrator {
    tol: Tolerance,
    h_hint: Option<f64>,
    pub stats: Stats,
}

fn combine<const N: usize>(y: &[f64; N], h: f64, terms: &[(f64, &[f64; N])]) -> [f64; N] {
    let mut out = *y;
    for (i, o) in out.iter_mut().enumerate() {
        let mut acc = 0.0;
        for (w, k) in terms {
            acc += w * k[i];
        }
        *o += h * acc;
    }
    out
}

impl Integrator {
    pub fn new(tol: Tolerance) -> Self {
        Integrator { tol, h_hint: None, stats: Stats::default() }
    }

    fn scale(&self, a: f64, b: f64) -> f64 {
        self.tol.atol + self.tol.rtol * a.abs().max(b.abs())
    }

    fn initial_step<const N: usize, F>(&self, f: &mut F, t0: f64, y0: &[f64; N], f0: &[f64; N], span: f64) -> f64
    where
        F: FnMut(f64, &[f64; N]) -> [f64; N],
    {
        let norm = |v: &[f64; N]| {
            let s: f64 = v.iter().zip(y0).map(|(x, y)| (x / self.scale(*y, *y)).powi(2)).sum();
            (s / N as f64).sqrt()
        };
        let d0 = norm(y0);
        let d1 = norm(f0);
        let h0 = if d0 < 1e-5 || d1 < 1e-5 { 1e-6 } else { 0.01 * d0 / d1 };
        let h0 = h0.min(span.abs());
        let dir = span.signum();
        let y1 = combine(y0, dir * h0, &[(1.0, f0)]);
        let f1 = f(t0 + dir * h0, &y1);
        let mut diff = [0.0; N];
        for i in 0..N {
            diff[i] = f1[i] - f0[i];
        }
        let d2 = norm(&diff) / h0;
        let h1 = if d1.max(d2) <= 1e-15 { (h0 * 1e-3).max(1e-6) } else { (0.01 / d1.max(d2)).powf(0.2) };
        (100.0 * h0).min(h1).min(span.abs())
    }

    /// Integrates `y' = f(t, y)` from `t0` to `t1` (either direction) and
    /// returns `y(t1)`. `observe` sees every accepted step.
    pub fn run<const N: usize, F, O>(
        &mut self,
        f: &mut F,
        t0: f64,
        y0: [f64; N],
        t1: f64,
        observe: &mut O,
    ) -> Result<[f64; N]>
    where
        F: FnMut(f64, &[f64; N]) -> [f64; N],
        O: FnMut(f64, &[f64; N]),
    {
        let span = t1 - t0;
        if span == 0.0 {
            return Ok(y0);
        }
        let dir = span.signum();
        let mut t = t0;
        let mut y = y0;
        let mut k1 = f(t, &y);
        let mut h = match self.h_hint {
            Some(h) => h.min(span.abs()),
            None => self.initial_step(f, t0, &y0, &k1, span),
        };
        let mut err_old: f64 = 1e-4;
        let mut rejected_last = false;
        let mut steps = 0usize;

        loop {
            let remaining = (t1 - t).abs();
            let last = h >= remaining;
            if last {
                h = remaining;
            }
            let min_step = 16.0 * f64::EPSILON * t.abs().max(1.0);
            if h < min_step && !last {
                return Err(HardyError::StepCollapse { t, h });
            }
            steps += 1;
            if steps > self.tol.max_steps {
                return Err(HardyError::NonConvergence(format!(
                    "integrator exceeded {} steps at t = {t}",
                    self.tol.max_steps
                )));
            }

            let hs = dir * h;
            let k2 = f(t + C2 * hs, &combine(&y, hs, &[(A21, &k1)]));
            let k3 = f(t + C3 * hs, &combine(&y, hs, &[(A31, &k1), (A32, &k2)]));
            let k4 = f(t + C4 * hs, &combine(&y, hs, &[(A41, &k1), (A42, &k2), (A43, &k3)]));
            let k5 = f(t + C5 * hs, &combine(&y, hs, &[(A51, &k1), (A52, &k2), (A53, &k3), (A54, &k4)]));
            let k6 = f(t + hs, &combine(&y, hs, &[(A61, &k1), (A62, &k2), (A63, &k3), (A64, &k4), (A65, &k5)]));
            let y_new = combine(&y, hs, &[(A71, &k1), (A73, &k3), (A74, &k4), (A75, &k5), (A76, &k6)]);
            let t_new = if last { t1 } else { t + hs };
            let k7 = f(t_new, &y_new);

            let mut acc = 0.0;
            for i in 0..N {
                let e = hs * (E1 * k1[i] + E3 * k3[i] + E4 * k4[i] + E5 * k5[i] + E6 * k6[i] + E7 * k7[i]);
                let sc = self.scale(y[i], y_new[i]);
                let e = e.abs() + ROUNDING_FLOOR * y_new[i].abs();
                acc += (e / sc).powi(2);
            }
            let err = (acc / N as f64).sqrt();

            if err.is_finite() && err <= 1.0 {
                let mut fac = SAFETY * err.max(1e-10).powf(-EXP_ALPHA) * err_old.powf(EXP_BETA);
                fac = fac.clamp(0.2, 10.0);
                if rejected_last {
                    fac = fac.min(1.0);
                }
                err_old = err.max(1e-4);
                t = t_new;
                y = y_new;
                k1 = k7;
                self.stats.accepted += 1;
                observe(t, &y);
                rejected_last = false;
                if last {
                    self.h_hint = Some(h * fac);
                    return Ok(y);
                }
                h *= fac;
            } else {
                self.stats.rejected += 1;
                let fac = if err.is_finite() { (SAFETY * err.powf(-EXP_ALPHA)).clamp(0.1, 1.0) } else { 0.1 };
                h *= fac;
                rejected_last = true;
            }
        }
    }

    /// Like [`Integrator::run`] without an observer.
    pub fn advance<const N: usize, F>(&mut self, f: &mut F, t0: f64, y0: [f64; N], t1: f64) -> Result<[f64; N]>
    where
        F: FnMut(f64, &[f64; N]) -> [f64; N],
    {
        self.run(f, t0, y0, t1, &mut |_, _| {})
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exponential_decay_forward_and_backward() {
        let mut f = |_t: f64, y: &[f64; 1]| [-y[0]];
        let mut it = Integrator::new(Tolerance::default());
        let y = it.advance(&mut f, 0.0, [1.0], 5.0).unwrap();
        assert!((y[0] - (-5f64).exp()).abs() < 1e-11);
        let mut it = Integrator::new(Tolerance::default());
        let y = it.advance(&mut f, 5.0, [(-5f64).exp()], 0.0).unwrap();
        assert!((y[0] - 1.0).abs() < 1e-9);
    }

    #[test]
    fn harmonic_oscillator_keeps_phase() {
        let mut f = |_t: f64, y: &[f64; 2]| [y[1], -y[0]];
        let mut it = Integrator::new(Tolerance::default());
        let t1 = 10.0;
        let y = it.advance(&mut f, 0.0, [1.0, 0.0], t1).unwrap();
        assert!((y[0] - t1.cos()).abs() < 1e-9);
        assert!((y[1] + t1.sin()).abs() < 1e-9);
    }

    #[test]
    fn observer_sees_monotone_times_ending_at_target() {
        let mut f = |t: f64, _y: &[f64; 1]| [t.cos()];
        let mut it = Integrator::new(Tolerance::default());
        let mut ts = Vec::new();
        it.run(&mut f, 0.0, [0.0], 3.0, &mut |t, _| ts.push(t)).unwrap();
        assert!(ts.windows(2).all(|w| w[1] > w[0]));
        assert_eq!(*ts.last().unwrap(), 3.0);
    }

    #[test]
    fn impossible_tolerance_collapses() {
        let tol = Tolerance { rtol: 1e-14, atol: 1e-16, max_steps: 1_000_000 };
        let mut f = |t: f64, y: &[f64; 1]| [y[0] * t.sin()];
        let mut it = Integrator::new(tol);
        let r = it.advance(&mut f, 0.0, [1.0], 4.0);
        assert!(matches!(r, Err(HardyError::StepCollapse { .. })), "{r:?}");
    }
}
