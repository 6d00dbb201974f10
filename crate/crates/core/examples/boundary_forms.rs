//! Boundary-form integrands along the equidistance curve, as CSV columns
//! (θ, value) for a chosen form, opening and cap angle.
//!
//! cargo run --example boundary_forms -- two_sided 1.5457pi 0.8pi

use hardy_core::certify::forms::{form_grid, FORM_TOL};
use hardy_core::certify::{boundary_form_samples, FormKind};
use hardy_core::cli::parse_angle;
use hardy_core::HardyError;

fn main() -> hardy_core::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let kind_name = args.first().map(String::as_str).unwrap_or("line_segment");
    let kind = FormKind::ALL
        .into_iter()
        .find(|k| k.name() == kind_name)
        .ok_or_else(|| HardyError::Parse(format!("unknown form '{kind_name}'")))?;
    let beta = parse_angle(args.get(1).map(String::as_str).unwrap_or("2pi"))?;
    let gamma = parse_angle(args.get(2).map(String::as_str).unwrap_or("0.6pi"))?;
    let samples = boundary_form_samples(kind, beta, gamma, &form_grid(kind, beta, gamma, 400)?)?;
    println!("theta,value");
    for (t, v) in &samples {
        println!("{t:.12},{v:.12e}");
    }
    let min = samples.iter().map(|s| s.1).fold(f64::INFINITY, f64::min);
    eprintln!("{}: min {min:.3e} ({})", kind.name(), if min >= -FORM_TOL { "non-negative" } else { "negative" });
    Ok(())
}
