//! Closed-form constants against the shooting oracle across (β_cr, 2π].
//!
//! cargo run --release --example shooting_cross_check -- [count]

use std::f64::consts::PI;

use hardy_core::ode::shoot_c;
use hardy_core::sector::TWO_PI;
use hardy_core::{beta_critical, solve_c_beta};

fn main() -> hardy_core::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(21);
    let bcr = beta_critical();
    let mut worst: f64 = 0.0;
    println!("{:>10} {:>16} {:>16} {:>10}", "beta/pi", "closed", "shooting", "diff");
    for k in 1..=n {
        let b = bcr + (TWO_PI - bcr) * k as f64 / n as f64;
        let c = solve_c_beta(b)?.c;
        let s = shoot_c(b)?.c_estimate;
        worst = worst.max((c - s).abs());
        println!("{:>10.6} {c:>16.12} {s:>16.12} {:>10.2e}", b / PI, (c - s).abs());
    }
    println!("max difference {worst:.2e}");
    Ok(())
}
