//! Hardy constant of the plane with a slit, two ways.

use hardy_core::ode::shoot_c;
use hardy_core::sector::TWO_PI;
use hardy_core::solve_c_beta;

fn main() -> hardy_core::Result<()> {
    let s = solve_c_beta(TWO_PI)?;
    let shot = shoot_c(TWO_PI)?;
    println!("closed form: c = {:.12}, alpha = {:.10}, residual {:.2e}", s.c, s.alpha, s.residual);
    println!(
        "shooting:    c = {:.12} ({} steps, psi'/psi at pi = {:.2e})",
        shot.c_estimate, shot.steps, shot.terminal_derivative
    );
    println!("difference:  {:.2e}", (s.c - shot.c_estimate).abs());
    Ok(())
}
