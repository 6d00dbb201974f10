//! Smallest eigenvalue of A u = λ D u on a lattice, where A is the 5-point
//! Dirichlet form and D carries the weight 1/d².

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::grid::GridProblem;
use crate::error::{HardyError, Result};

const NONE: u32 = u32::MAX;
/// Fixed chunk length for parallel reductions, so sums do not depend on the
/// number of workers.
const CHUNK: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenOptions {
    /// Relative change of λ between sweeps at which iteration stops.
    pub tol: f64,
    pub max_iterations: usize,
    /// Relative residual of the inner linear solves.
    pub cg_tol: f64,
    pub max_cg_iterations: usize,
}

impl Default for EigenOptions {
    fn default() -> Self {
        EigenOptions { tol: 1e-8, max_iterations: 2000, cg_tol: 1e-8, max_cg_iterations: 20000 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RayleighEstimate {
    pub lambda: f64,
    pub iterations: usize,
    pub h: f64,
    pub nodes: usize,
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    let partial: Vec<f64> =
        a.par_chunks(CHUNK).zip(b.par_chunks(CHUNK)).map(|(x, y)| x.iter().zip(y).map(|(p, q)| p * q).sum()).collect();
    partial.iter().sum()
}

/// y = A x with A scaled by h².
fn apply_a(g: &GridProblem, x: &[f64], y: &mut [f64]) {
    y.par_iter_mut().enumerate().for_each(|(k, yk)| {
        let mut s = g.diag[k] * x[k];
        for &m in &g.nbrs[k] {
            if m != NONE {
                s -= x[m as usize];
            }
        }
        *yk = s;
    });
}

/// Conjugate gradients for A x = b, starting from the contents of `x`.
fn cg(g: &GridProblem, b: &[f64], x: &mut [f64], opts: &EigenOptions) -> Result<usize> {
    let n = b.len();
    let mut r = vec![0.0; n];
    apply_a(g, x, &mut r);
    for k in 0..n {
        r[k] = b[k] - r[k];
    }
    let bnorm = dot(b, b).sqrt().max(f64::MIN_POSITIVE);
    let mut p = r.clone();
    let mut ap = vec![0.0; n];
    let mut rr = dot(&r, &r);
    for it in 0..opts.max_cg_iterations {
        if rr.sqrt() <= opts.cg_tol * bnorm {
            return Ok(it);
        }
        apply_a(g, &p, &mut ap);
        let alpha = rr / dot(&p, &ap);
        x.par_iter_mut().zip(&p).for_each(|(xk, pk)| *xk += alpha * pk);
        r.par_iter_mut().zip(&ap).for_each(|(rk, apk)| *rk -= alpha * apk);
        let rr_new = dot(&r, &r);
        let beta = rr_new / rr;
        rr = rr_new;
        p.par_iter_mut().zip(&r).for_each(|(pk, rk)| *pk = rk + beta * *pk);
    }
    Err(HardyError::NonConvergence(format!(
        "linear solve stalled after {} iterations (residual {:.3e})",
        opts.max_cg_iterations,
        rr.sqrt() / bnorm
    )))
}

/// Inverse iteration; returns the estimate and the D-normalized eigenvector.
pub fn estimate_with_vector(g: &GridProblem, opts: &EigenOptions) -> Result<(RayleighEstimate, Vec<f64>)> {
    let n = g.len();
    let w: Vec<f64> = g.dist.iter().map(|d| (g.h / d).powi(2)).collect();
    let mut u: Vec<f64> = g.dist.iter().map(|d| d.sqrt()).collect();
    let mut au = vec![0.0; n];
    let mut rhs = vec![0.0; n];
    let mut x = vec![0.0; n];

    let rayleigh = |u: &[f64], au: &mut [f64]| {
        apply_a(g, u, au);
        let num = dot(u, au);
        let uw: Vec<f64> = u.iter().zip(&w).map(|(v, wk)| v * wk).collect();
        let den = dot(u, &uw);
        (num / den, den)
    };
    let (mut lambda, den) = rayleigh(&u, &mut au);
    u.iter_mut().for_each(|v| *v /= den.sqrt());
    x.iter_mut().zip(&u).for_each(|(xk, v)| *xk = v / lambda);

    for it in 1..=opts.max_iterations {
        for k in 0..n {
            rhs[k] = w[k] * u[k];
        }
        cg(g, &rhs, &mut x, opts)?;
        let (next, den) = rayleigh(&x, &mut au);
        let s = den.sqrt();
        for k in 0..n {
            u[k] = x[k] / s;
            // warm start for the next solve: x ≈ u / λ
            x[k] = u[k] / next;
        }
        let done = (next - lambda).abs() <= opts.tol * next;
        lambda = next;
        if done {
            return Ok((RayleighEstimate { lambda, iterations: it, h: g.h, nodes: n }, u));
        }
    }
    Err(HardyError::NonConvergence(format!(
        "inverse iteration did not settle in {} sweeps (λ ≈ {lambda})",
        opts.max_iterations
    )))
}

/// Smallest discrete Hardy quotient on the lattice.
pub fn estimate_constant(g: &GridProblem) -> Result<RayleighEstimate> {
    Ok(estimate_with_vector(g, &EigenOptions::default())?.0)
}
