//! Lattice discretization of a planar domain for the discrete Hardy quotient.

use std::collections::VecDeque;
use std::f64::consts::{PI, TAU};

use crate::certify::geometry::{point_segment_distance, segment_crosses, Point, Polygon};
use crate::certify::{validate_r_samples, DomainSpec};
use crate::error::{HardyError, Result};

/// Radius at which unbounded domains are cut off, with a Dirichlet arc.
pub const TRUNCATION_RADIUS: f64 = 8.0;
/// Length used for halflines when measuring distance to them.
const RAY_LENGTH: f64 = 1e3;
const MIN_NODES: usize = 100;
/// Nodes closer than this many spacings to the boundary are not unknowns.
const NEAR_BOUNDARY: f64 = 0.5 - 1e-9;
const NONE: u32 = u32::MAX;

type Segment = (Point, Point);

/// How a lattice edge leaving the domain is treated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Exit {
    Dirichlet,
    Neumann,
}

struct Region {
    inside: Box<dyn Fn(Point) -> bool>,
    /// Boundary pieces the distance is measured to.
    distance_to: Vec<Segment>,
    /// Segments that cut lattice edges between two inside nodes (slits) and
    /// that mark exits as Dirichlet when `default_exit` is Neumann.
    dirichlet: Vec<Segment>,
    default_exit: Exit,
    lo: Point,
    hi: Point,
}

/// Interior lattice nodes with their distances and 5-point connectivity.
#[derive(Debug, Clone)]
pub struct GridProblem {
    pub h: f64,
    pub origin: Point,
    pub nx: usize,
    pub ny: usize,
    /// Lattice coordinates (i, j) of each unknown.
    pub nodes: Vec<(usize, usize)>,
    pub dist: Vec<f64>,
    /// Neighbor unknowns (E, W, N, S); `u32::MAX` when absent.
    pub(crate) nbrs: Vec<[u32; 4]>,
    /// Diagonal of the h²-scaled stiffness matrix.
    pub(crate) diag: Vec<f64>,
}

impl GridProblem {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn point(&self, k: usize) -> Point {
        let (i, j) = self.nodes[k];
        [self.origin[0] + i as f64 * self.h, self.origin[1] + j as f64 * self.h]
    }

    /// Index of the unknown at lattice position (i, j), if any.
    pub fn index_of(&self, i: usize, j: usize) -> Option<usize> {
        self.nodes.binary_search(&(i, j)).ok()
    }

    /// Rectangle [0, length] × [0, height] with distance to the bottom side
    /// only; a finite proxy for the half-plane. `n` intervals across the height.
    pub fn strip(length: f64, height: f64, n: usize) -> Result<Self> {
        if !(length > 0.0 && height > 0.0) {
            return Err(HardyError::Domain("strip sides must be positive".into()));
        }
        let region = Region {
            inside: Box::new(move |p: Point| p[0] > 0.0 && p[0] < length && p[1] > 0.0 && p[1] < height),
            distance_to: vec![([-RAY_LENGTH, 0.0], [RAY_LENGTH, 0.0])],
            dirichlet: vec![],
            default_exit: Exit::Dirichlet,
            lo: [0.0, 0.0],
            hi: [length, height],
        };
        assemble(&region, n, height / n as f64)
    }
}

/// Lattice problem for a domain description; `n` intervals along the longer
/// side of the bounding box.
pub fn build_grid(spec: &DomainSpec, n: usize) -> Result<GridProblem> {
    let region = match spec {
        DomainSpec::Sector { beta } => sector_region(*beta)?,
        DomainSpec::OneReflexPolygon { vertices } => polygon_region(Polygon::new(vertices.clone())?),
        DomainSpec::Ebg { beta, gamma } => ebg_region(*beta, *gamma)?,
        DomainSpec::Dbeta { beta, r_samples } => dbeta_region(*beta, r_samples)?,
        DomainSpec::SectorCapConvex { .. } => {
            return Err(HardyError::Domain(
                "sector caps carry only angles, not a concrete convex set; describe the domain as a polygon".into(),
            ))
        }
    };
    let h = (region.hi[0] - region.lo[0]).max(region.hi[1] - region.lo[1]) / n as f64;
    assemble(&region, n, h)
}

fn polar_angle(p: Point) -> f64 {
    let a = p[1].atan2(p[0]);
    if a < 0.0 {
        a + TAU
    } else {
        a
    }
}

fn ray(from: Point, angle: f64) -> Segment {
    (from, [from[0] + RAY_LENGTH * angle.cos(), from[1] + RAY_LENGTH * angle.sin()])
}

fn sector_region(beta: f64) -> Result<Region> {
    if !(beta > 0.0 && beta <= TAU + 1e-12) {
        return Err(HardyError::Domain(format!("sector opening must lie in (0, 2π], got {beta}")));
    }
    let r = TRUNCATION_RADIUS;
    let rays = vec![ray([0.0, 0.0], 0.0), ray([0.0, 0.0], beta)];
    Ok(Region {
        inside: Box::new(move |p: Point| {
            let a = polar_angle(p);
            p[0].hypot(p[1]) < r && a > 0.0 && a < beta
        }),
        distance_to: rays.clone(),
        dirichlet: rays,
        default_exit: Exit::Dirichlet,
        lo: [-r, -r],
        hi: [r, r],
    })
}

fn polygon_region(poly: Polygon) -> Region {
    let edges: Vec<Segment> = poly.edges().collect();
    let (lo, hi) = poly.bbox();
    Region {
        inside: Box::new(move |p: Point| poly.contains(p)),
        distance_to: edges.clone(),
        dirichlet: edges,
        default_exit: Exit::Dirichlet,
        lo,
        hi,
    }
}

/// Segment O = (0,0) to P = (1,0), a halfline from O at angle β and one from
/// P at angle π − γ, cut off at radius 8 around the midpoint of OP.
fn ebg_region(beta: f64, gamma: f64) -> Result<Region> {
    if !(beta > 0.0 && gamma > 0.0 && beta <= TAU + 1e-12 && gamma <= TAU + 1e-12 && beta + gamma <= 3.0 * PI + 1e-12) {
        return Err(HardyError::Domain(format!("invalid angles β = {beta}, γ = {gamma}")));
    }
    let o = [0.0, 0.0];
    let p = [1.0, 0.0];
    let center = [0.5, 0.0];
    let far = 100.0;
    let dir_o = beta;
    let dir_p = PI - gamma;
    let span = beta + gamma - PI;
    let mut verts = vec![[far * dir_o.cos(), far * dir_o.sin()], o, p, [1.0 + far * dir_p.cos(), far * dir_p.sin()]];
    let m = 64;
    for k in 1..m {
        let a = dir_p + span * k as f64 / m as f64;
        verts.push([center[0] + 1.5 * far * a.cos(), center[1] + 1.5 * far * a.sin()]);
    }
    let poly = Polygon::new(verts)?;
    let r = TRUNCATION_RADIUS;
    let boundary = vec![(o, p), ray(o, dir_o), ray(p, dir_p)];
    Ok(Region {
        inside: Box::new(move |q: Point| (q[0] - center[0]).hypot(q[1] - center[1]) < r && poly.contains(q)),
        distance_to: boundary.clone(),
        dirichlet: boundary,
        default_exit: Exit::Dirichlet,
        lo: [center[0] - r, -r],
        hi: [center[0] + r, r],
    })
}

fn dbeta_region(beta: f64, samples: &[(f64, f64)]) -> Result<Region> {
    if !(beta > PI && beta <= TAU + 1e-12) {
        return Err(HardyError::Domain(format!("mixed domain needs β ∈ (π, 2π], got {beta}")));
    }
    validate_r_samples(beta, samples)?;
    let samples = samples.to_vec();
    let rmax = samples.iter().map(|s| s.1).fold(0.0, f64::max);
    let r_at = move |t: f64| -> f64 {
        let k = samples.partition_point(|s| s.0 <= t).clamp(1, samples.len() - 1);
        let (t0, r0) = samples[k - 1];
        let (t1, r1) = samples[k];
        r0 + (r1 - r0) * (t - t0) / (t1 - t0)
    };
    let r0 = r_at(0.0);
    let rb = r_at(beta);
    let gamma0 = vec![([0.0, 0.0], [r0, 0.0]), ([0.0, 0.0], [rb * beta.cos(), rb * beta.sin()])];
    Ok(Region {
        inside: Box::new(move |p: Point| {
            let a = polar_angle(p);
            a > 0.0 && a < beta && p[0].hypot(p[1]) < r_at(a)
        }),
        distance_to: gamma0.clone(),
        dirichlet: gamma0,
        default_exit: Exit::Neumann,
        lo: [-rmax, -rmax],
        hi: [rmax, rmax],
    })
}

fn assemble(region: &Region, n: usize, h: f64) -> Result<GridProblem> {
    if n < 4 {
        return Err(HardyError::Resolution(format!("grid needs n ≥ 4, got {n}")));
    }
    let (lo, hi) = (region.lo, region.hi);
    let nx = ((hi[0] - lo[0]) / h).round() as usize;
    let ny = ((hi[1] - lo[1]) / h).round() as usize;
    let at = |i: usize, j: usize| [lo[0] + i as f64 * h, lo[1] + j as f64 * h];
    let dist_of = |p: Point| {
        region.distance_to.iter().map(|(a, b)| point_segment_distance(p, *a, *b)).fold(f64::INFINITY, f64::min)
    };

    let mut index = vec![NONE; (nx + 1) * (ny + 1)];
    let mut nodes = Vec::new();
    let mut dist = Vec::new();
    for i in 1..nx {
        for j in 1..ny {
            let p = at(i, j);
            if !(region.inside)(p) {
                continue;
            }
            // nodes hugging an oblique boundary count as boundary points
            let d = dist_of(p);
            if d < NEAR_BOUNDARY * h {
                continue;
            }
            index[i * (ny + 1) + j] = nodes.len() as u32;
            nodes.push((i, j));
            dist.push(d);
        }
    }
    if nodes.len() < MIN_NODES {
        return Err(HardyError::Resolution(format!(
            "only {} interior nodes at n = {n}; need at least {MIN_NODES}",
            nodes.len()
        )));
    }

    let cut = |a: Point, b: Point| region.dirichlet.iter().any(|(c, d)| segment_crosses(a, b, *c, *d));
    let offsets: [(isize, isize); 4] = [(1, 0), (-1, 0), (0, 1), (0, -1)];
    let mut nbrs = vec![[NONE; 4]; nodes.len()];
    let mut diag = vec![0.0; nodes.len()];
    for (k, &(i, j)) in nodes.iter().enumerate() {
        let p = at(i, j);
        for (s, (di, dj)) in offsets.iter().enumerate() {
            let (ii, jj) = (i as isize + di, j as isize + dj);
            let other = if ii > 0 && jj > 0 && (ii as usize) < nx && (jj as usize) < ny {
                index[ii as usize * (ny + 1) + jj as usize]
            } else {
                NONE
            };
            let q = [p[0] + *di as f64 * h, p[1] + *dj as f64 * h];
            if other != NONE && !cut(p, q) {
                nbrs[k][s] = other;
                diag[k] += 1.0;
            } else if other != NONE {
                // both ends inside, separated by a slit
                diag[k] += 1.0;
            } else {
                // on the Dirichlet part itself, or across it
                let exit =
                    if cut(p, q) || dist_of(q) < NEAR_BOUNDARY * h { Exit::Dirichlet } else { region.default_exit };
                if exit == Exit::Dirichlet {
                    diag[k] += 1.0;
                }
            }
        }
    }

    let g = GridProblem { h, origin: lo, nx, ny, nodes, dist, nbrs, diag };
    check_connected(&g)?;
    Ok(g)
}

fn check_connected(g: &GridProblem) -> Result<()> {
    let mut seen = vec![false; g.len()];
    let mut queue = VecDeque::from([0usize]);
    seen[0] = true;
    let mut count = 1;
    while let Some(k) = queue.pop_front() {
        for &m in &g.nbrs[k] {
            if m != NONE && !seen[m as usize] {
                seen[m as usize] = true;
                count += 1;
                queue.push_back(m as usize);
            }
        }
    }
    if count != g.len() {
        return Err(HardyError::Resolution(format!(
            "lattice splits into several components ({count} of {} nodes reachable)",
            g.len()
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square() -> DomainSpec {
        DomainSpec::OneReflexPolygon { vertices: vec![[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]] }
    }

    fn l_shape() -> DomainSpec {
        DomainSpec::OneReflexPolygon {
            vertices: vec![[0.0, 0.0], [2.0, 0.0], [2.0, 1.0], [1.0, 1.0], [1.0, 2.0], [0.0, 2.0]],
        }
    }

    #[test]
    fn square_distances_bounded() {
        let g = build_grid(&square(), 64).unwrap();
        assert_eq!(g.len(), 63 * 63);
        assert!(g.dist.iter().all(|&d| d > 0.0 && d <= 0.5));
    }

    #[test]
    fn l_shape_corner_neighbor() {
        let g = build_grid(&l_shape(), 64).unwrap();
        // reflex corner (1,1) is lattice point (32, 32); diagonal neighbor inside
        let k = g.index_of(31, 31).unwrap();
        assert!((g.dist[k] - 2f64.sqrt() * g.h).abs() < 1e-14);
        assert!(g.index_of(33, 33).is_none());
    }

    #[test]
    fn ebg_mask_connected() {
        let g = build_grid(&DomainSpec::Ebg { beta: 1.5 * PI, gamma: 1.5 * PI }, 64).unwrap();
        assert!(g.len() > 1000);
    }

    #[test]
    fn slit_cuts_edges() {
        let g = build_grid(&DomainSpec::Sector { beta: TAU }, 32).unwrap();
        // nodes just above and below the positive x-axis are not linked
        for (k, &(i, j)) in g.nodes.iter().enumerate() {
            let p = g.point(k);
            if p[0] > 0.0 && p[1] > 0.0 && p[1] < g.h * 1.01 {
                let below = g.index_of(i, j - 2);
                assert!(below.is_some());
                assert!(!g.nbrs[k].contains(&(below.unwrap() as u32)));
            }
        }
    }

    #[test]
    fn too_coarse_is_a_resolution_error() {
        assert!(matches!(build_grid(&square(), 8), Err(HardyError::Resolution(_))));
        let cap = DomainSpec::SectorCapConvex { beta: 1.5 * PI, gamma_plus: 1.0, gamma_minus: 1.0, bounded: true };
        assert!(build_grid(&cap, 64).is_err());
    }

    #[test]
    fn dbeta_has_neumann_exits() {
        let samples: Vec<(f64, f64)> = (0..=40).map(|k| (1.5 * PI * k as f64 / 40.0, 1.0)).collect();
        let g = build_grid(&DomainSpec::Dbeta { beta: 1.5 * PI, r_samples: samples }, 64).unwrap();
        // some boundary node has fewer than four stiffness entries
        assert!(g.diag.iter().any(|&d| d < 4.0));
        assert!(g.dist.iter().all(|&d| d > 0.0));
    }
}
