//! The comparison functions behind the cap-angle bounds: the h family,
//! the α = 1/2 family and the polynomial upper solution ḡ.

use std::f64::consts::{FRAC_PI_2, PI};

use hardy_core::ode::hprofile::{g_upper_bound, g_upper_residual, h_family_half, solve_h};
use hardy_core::sector::TWO_PI;
use hardy_core::{beta_critical, SectorProfile};

fn main() -> hardy_core::Result<()> {
    println!("h(alpha, theta) at theta = pi/4, pi/2");
    for a in [0.55, 0.65, 0.75, 0.85] {
        let p = solve_h(a)?;
        println!("  alpha {a:.2}: {:.8} {:.8}", p.h[99], p.h[199]);
    }
    for lam in [0.0, 0.5, 2.0] {
        let p = h_family_half(lam)?;
        println!("  alpha 1/2, lambda {lam}: {:.8} {:.8}", p.h[99], p.h[199]);
    }

    println!("gbar - g and the upper-solution residual");
    for b in [beta_critical(), 1.7 * PI, TWO_PI] {
        let prof = SectorProfile::shared(b)?;
        let a = prof.alpha();
        let mut gap = f64::INFINITY;
        let mut res = f64::INFINITY;
        for k in 1..400 {
            let th = FRAC_PI_2 * k as f64 / 400.0;
            gap = gap.min(g_upper_bound(th, a)? - prof.g(th)?);
            res = res.min(g_upper_residual(th, a)?);
        }
        println!("  beta {:.4} pi: min gap {gap:.3e}, min residual {res:.3e}", b / PI);
    }
    Ok(())
}
