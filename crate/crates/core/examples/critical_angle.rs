//! The critical opening β_cr, where the sector constant leaves 1/4.

use std::f64::consts::PI;

use hardy_core::sector::{gamma_ratio_rhs, tans1_residual};
use hardy_core::{beta_critical, solve_c_beta};

fn main() -> hardy_core::Result<()> {
    let b = beta_critical();
    println!("beta_cr = {b:.12} = {:.10} pi", b / PI);
    println!("tan((beta_cr - pi)/4) = {:.12}", ((b - PI) / 4.0).tan());
    println!("4 (G(3/4)/G(1/4))^2   = {:.12}", 2.0 * gamma_ratio_rhs(0.0)?);
    println!("c-equation residual at (beta_cr, 1/4): {:.3e}", tans1_residual(b, 0.25)?);
    for db in [-0.01, 0.01, 0.05] {
        let s = solve_c_beta(b + db)?;
        println!("c at beta_cr {db:+.2}: {:.10}", s.c);
    }
    Ok(())
}
