#![allow(dead_code)]

use std::f64::consts::PI;

use hardy_core::certify::Point;

pub fn l_shape() -> Vec<Point> {
    vec![[0.0, 0.0], [2.0, 0.0], [2.0, 1.0], [1.0, 1.0], [1.0, 2.0], [0.0, 2.0]]
}

pub fn unit_square() -> Vec<Point> {
    vec![[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]]
}

/// One reflex vertex of angle β at the origin, both neighbors with interior
/// angle γ, closed off by a large triangle-like outer boundary.
pub fn notch_polygon(beta: f64, gamma: f64) -> Vec<Point> {
    let n = [1.0, 0.0];
    let d = PI - gamma;
    let n2 = [n[0] + d.cos(), n[1] + d.sin()];
    let p = [beta.cos(), beta.sin()];
    let e = beta + PI + gamma;
    let p2 = [p[0] + e.cos(), p[1] + e.sin()];
    vec![p2, p, [0.0, 0.0], n, n2, [0.0, 10.0], [-10.0, 0.0], [0.0, -10.0]]
}
