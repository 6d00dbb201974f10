//! Discrete Hardy quotient on a few domains, with refinement.
//!
//! cargo run --release --example variational_estimate -- [n ...]

use std::f64::consts::TAU;
use std::time::Instant;

use hardy_core::certify::DomainSpec;
use hardy_core::rayleigh::{build_grid, estimate_constant, GridProblem};

fn main() -> hardy_core::Result<()> {
    let sizes: Vec<usize> = std::env::args().skip(1).filter_map(|s| s.parse().ok()).collect();
    let sizes = if sizes.is_empty() { vec![32, 64, 128] } else { sizes };
    let l_shape = DomainSpec::OneReflexPolygon {
        vertices: vec![[0.0, 0.0], [2.0, 0.0], [2.0, 1.0], [1.0, 1.0], [1.0, 2.0], [0.0, 2.0]],
    };
    let slit = DomainSpec::Sector { beta: TAU };
    println!("{:>10} {:>5} {:>14} {:>6} {:>9}", "domain", "n", "lambda", "iters", "seconds");
    for &n in &sizes {
        let cases: Vec<(&str, GridProblem)> = vec![
            ("strip", GridProblem::strip(4.0, 1.0, n)?),
            ("l_shape", build_grid(&l_shape, n)?),
            ("slit_disk", build_grid(&slit, n)?),
        ];
        for (name, g) in cases {
            let t = Instant::now();
            let e = estimate_constant(&g)?;
            println!("{name:>10} {n:>5} {:>14.10} {:>6} {:>9.2}", e.lambda, e.iterations, t.elapsed().as_secs_f64());
        }
    }
    Ok(())
}
