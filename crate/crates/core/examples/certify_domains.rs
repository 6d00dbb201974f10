//! Certificates for one domain of each family.

use std::f64::consts::PI;

use hardy_core::certify::{certify, sample_polar_graph, DomainSpec, Verdict};
use hardy_core::sector::TWO_PI;

fn main() -> hardy_core::Result<()> {
    let l_shape = vec![[0.0, 0.0], [2.0, 0.0], [2.0, 1.0], [1.0, 1.0], [1.0, 2.0], [0.0, 2.0]];
    let domains = vec![
        ("L-shape", DomainSpec::OneReflexPolygon { vertices: l_shape }),
        (
            "sector cap",
            DomainSpec::SectorCapConvex {
                beta: 1.3 * PI,
                gamma_plus: 0.65 * PI,
                gamma_minus: 0.65 * PI,
                bounded: true,
            },
        ),
        (
            "wide cap",
            DomainSpec::SectorCapConvex { beta: TWO_PI, gamma_plus: 0.75 * PI, gamma_minus: 0.5 * PI, bounded: true },
        ),
        ("segment, reflex + right", DomainSpec::Ebg { beta: 1.8 * PI, gamma: 0.5 * PI }),
        ("segment, two reflex", DomainSpec::Ebg { beta: 1.5 * PI, gamma: 1.5 * PI }),
        ("mixed, circular", DomainSpec::Dbeta { beta: TWO_PI, r_samples: sample_polar_graph(TWO_PI, 64, |_| 1.0) }),
        (
            "mixed, wavy",
            DomainSpec::Dbeta { beta: TWO_PI, r_samples: sample_polar_graph(TWO_PI, 50, |t| 1.0 + (4.0 * t).sin()) },
        ),
    ];
    for (name, spec) in domains {
        let r = certify(&spec)?;
        let verdict = match &r.verdict {
            Verdict::Certified { c } => format!("certified c = {c:.10}"),
            Verdict::ConditionFailed { name, margin } => format!("{name} fails by {:.4}", -margin),
            Verdict::Inconclusive => "inconclusive".into(),
        };
        println!("{name:>24}: {verdict}");
        for k in &r.checks {
            println!("{:>28} {:<34} {:>12.4e}", if k.satisfied { "ok" } else { "NO" }, k.name, k.margin);
        }
    }
    Ok(())
}
