//! The sector eigenfunction ψ on (0, β/2] and its Riccati transform.

use std::f64::consts::PI;

use hardy_core::sector::{eigen_profile, TWO_PI};
use hardy_core::{solve_c_beta, SectorProfile};

fn main() -> hardy_core::Result<()> {
    let beta = std::env::args().nth(1).and_then(|s| hardy_core::cli::parse_angle(&s).ok()).unwrap_or(TWO_PI);
    let sol = solve_c_beta(beta)?;
    let prof = SectorProfile::shared(beta)?;
    let e = eigen_profile(&sol, 12)?;
    println!("beta = {:.4} pi, c = {:.10}, alpha = {:.10}, a2 = {:.6}", beta / PI, sol.c, sol.alpha, e.series_a2);
    println!("junction mismatch at pi/2: {:.2e}", prof.junction_mismatch()?);
    println!("{:>10} {:>14} {:>14} {:>14}", "theta/pi", "psi", "psi'", "f = psi'/psi");
    for k in 0..e.grid.len() {
        let th = e.grid[k];
        println!("{:>10.5} {:>14.8} {:>14.8} {:>14.8}", th / PI, e.psi[k], e.dpsi[k], prof.f(th)?);
    }
    Ok(())
}
