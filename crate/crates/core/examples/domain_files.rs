//! Writes one domain file per family, in the format read by
//! `hardy certify` and `hardy validate`.
//!
//! cargo run --example domain_files -- out_dir

use std::path::PathBuf;

use hardy_core::cli::DomainDoc;

fn main() -> hardy_core::Result<()> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "domains".into()));
    std::fs::create_dir_all(&dir)?;
    let wavy = (0..=50)
        .map(|k| {
            let t = 2.0 * k as f64 / 50.0;
            [t, 1.0 + (4.0 * std::f64::consts::PI * t).sin()]
        })
        .collect();
    let docs = [
        ("sector.json", DomainDoc::Sector { beta: 2.0 }),
        ("cap.json", DomainDoc::SectorCap { beta: 1.3, gamma_plus: 0.65, gamma_minus: 0.65, bounded: true }),
        (
            "l_shape.json",
            DomainDoc::Polygon {
                vertices: vec![[0.0, 0.0], [2.0, 0.0], [2.0, 1.0], [1.0, 1.0], [1.0, 2.0], [0.0, 2.0]],
            },
        ),
        ("ebg.json", DomainDoc::Ebg { beta: 1.5, gamma: 1.5 }),
        ("dbeta_wavy.json", DomainDoc::Dbeta { beta: 2.0, r_samples: wavy }),
        ("strip.json", DomainDoc::Strip { length: 4.0, height: 1.0 }),
    ];
    for (name, doc) in docs {
        let p = dir.join(name);
        std::fs::write(&p, serde_json::to_string_pretty(&doc)?)?;
        println!("{}", p.display());
    }
    Ok(())
}
