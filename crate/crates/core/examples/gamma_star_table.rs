//! Critical cap angles γ* and γ** over β ∈ [π, 2π], as CSV.

use hardy_core::cli::{cmd_gamma_star, gamma_star_csv, parse_sweep};

fn main() -> hardy_core::Result<()> {
    let sweep = parse_sweep(&std::env::args().nth(1).unwrap_or_else(|| "pi:2pi:21".into()))?;
    print!("{}", gamma_star_csv(&cmd_gamma_star(&sweep)?)?);
    Ok(())
}
