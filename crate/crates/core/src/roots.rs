//! Bracketed root finding: bisection with secant acceleration.

use crate::error::{HardyError, Result};

#[derive(Debug, Clone, Copy)]
pub struct Root {
    pub x: f64,
    pub fx: f64,
    pub iterations: usize,
}

const MAX_ITER: usize = 400;

/// Finds a zero of `f` on `[lo, hi]` to within `tol` in the abscissa.
///
/// Every step first tries a secant point from the bracket ends; it falls back
/// to bisection whenever the secant point leaves the bracket or the previous
/// step failed to halve it.
pub fn bracketed<F>(mut f: F, lo: f64, hi: f64, tol: f64) -> Result<Root>
where
    F: FnMut(f64) -> Result<f64>,
{
    let (mut a, mut b) = (lo.min(hi), lo.max(hi));
    let mut fa = f(a)?;
    let mut fb = f(b)?;
    if fa == 0.0 {
        return Ok(Root { x: a, fx: fa, iterations: 0 });
    }
    if fb == 0.0 {
        return Ok(Root { x: b, fx: fb, iterations: 0 });
    }
    if fa.signum() == fb.signum() {
        return Err(HardyError::BracketFailure { lo: a, hi: b });
    }

    let mut last_width = b - a;
    let mut force_bisect = false;
    for it in 1..=MAX_ITER {
        let width = b - a;
        if width <= tol {
            let (x, fx) = if fa.abs() < fb.abs() { (a, fa) } else { (b, fb) };
            return Ok(Root { x, fx, iterations: it });
        }
        let mid = 0.5 * (a + b);
        let secant = b - fb * (b - a) / (fb - fa);
        let x = if force_bisect || !(secant > a && secant < b) {
            mid
        } else {
            // keep the probe a little inside the bracket
            let guard = 0.25 * tol;
            secant.clamp(a + guard, b - guard)
        };
        let fx = f(x)?;
        if fx == 0.0 {
            return Ok(Root { x, fx, iterations: it });
        }
        if fx.signum() == fa.signum() {
            a = x;
            fa = fx;
        } else {
            b = x;
            fb = fx;
        }
        let new_width = b - a;
        force_bisect = new_width > 0.5 * last_width;
        last_width = new_width;
    }
    Err(HardyError::NonConvergence(format!("root bracket [{a}, {b}] did not shrink below {tol} in {MAX_ITER} steps")))
}
