mod common;

use std::f64::consts::PI;

use hardy_core::certify::{certify, sample_polar_graph, DomainSpec};
use hardy_core::rayleigh::{build_grid, estimate_constant, estimate_with_vector, EigenOptions};
use hardy_core::sector::TWO_PI;

use common::l_shape;

fn lambda(spec: &DomainSpec, n: usize) -> f64 {
    estimate_constant(&build_grid(spec, n).unwrap()).unwrap().lambda
}

#[test]
fn slit_disk_refinement_trend() {
    let slit = DomainSpec::Sector { beta: TWO_PI };
    let l: Vec<f64> = [64, 128, 256].iter().map(|&n| lambda(&slit, n)).collect();
    assert!(l[0] >= l[1] && l[1] >= l[2] - 1e-3, "{l:?}");
}

#[test]
fn estimates_sit_above_certified_constants() {
    let specs = vec![
        DomainSpec::OneReflexPolygon { vertices: l_shape() },
        DomainSpec::Sector { beta: TWO_PI },
        DomainSpec::Ebg { beta: 1.5 * PI, gamma: 1.5 * PI },
        DomainSpec::Ebg { beta: 1.8 * PI, gamma: 0.5 * PI },
        DomainSpec::Dbeta { beta: TWO_PI, r_samples: sample_polar_graph(TWO_PI, 64, |_| 1.0) },
    ];
    for spec in specs {
        let c = certify(&spec).unwrap().certified_constant().expect("certified");
        let l = lambda(&spec, 256);
        assert!(l >= c - 0.01, "{spec:?}: λ = {l}, c = {c}");
    }
}

#[test]
fn symmetric_segment_domain_has_symmetric_mode() {
    let g = build_grid(&DomainSpec::Ebg { beta: 1.5 * PI, gamma: 1.5 * PI }, 96).unwrap();
    let (_, u) = estimate_with_vector(&g, &EigenOptions::default()).unwrap();
    let top = u.iter().cloned().fold(0.0, f64::max);
    for (k, &(i, j)) in g.nodes.iter().enumerate() {
        let m = g.index_of(g.nx - i, j).unwrap();
        assert!((u[k] - u[m]).abs() <= 1e-6 * top);
    }
}
