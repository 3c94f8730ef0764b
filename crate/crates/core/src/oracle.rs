//! Brute-force cross-checks for the tower solver.
//!
//! [`Oracle::grid_min_energy`] walks the same four families as the solver,
//! but over a fine uniform grid: for each family the layer count needed to
//! hit the mass is a continuous function `q` of the radius (or stadium
//! length), so every integer crossed by `q` inside a grid cell gives one
//! candidate, refined by bisection inside that cell. Nothing is assumed about
//! monotonicity or about which layer counts are worth trying.
//!
//! [`discretized_measure`] recomputes area and perimeter of a rounded region
//! from an explicit polygon, independently of the Steiner formulas.

use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::geometry::{Norm, PolygonKind, RoundedRegion, Vec2};
use crate::isoperimetric::Domain;
use crate::roots::bisect;
use crate::tower::{ProblemSpec, TowerCase, TowerProfile, TowerSolver};
use crate::{fmath, Error, Result};

/// Smallest accepted grid size.
pub const MIN_GRID: usize = 1000;

/// Smallest accepted number of chords per rounded corner.
pub const MIN_SEGMENTS: usize = 64;

const MASS_RESIDUAL_TOL: f64 = 1e-9;

/// Where the oracle found its minimum.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OracleCandidate {
    pub case: TowerCase,
    pub j_max: usize,
    /// Radius for families A–C, per-layer stadium length for D.
    pub param: f64,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OracleReport {
    /// `+∞` when no candidate was found.
    pub best_energy: f64,
    pub best_descriptor: Option<OracleCandidate>,
    pub grid_resolution: usize,
    /// `best_energy − solver energy`, once compared.
    pub discrepancy: Option<f64>,
}

/// Grid oracle for a fixed domain and norm; reusable across masses.
#[derive(Clone, Debug)]
pub struct Oracle {
    domain: Domain,
    grid_n: usize,
    /// `(r, v(r))` on `[r_Ω, R_Ω]`.
    plaquettes: Vec<(f64, f64)>,
}

impl Oracle {
    pub fn new(domain: RoundedRegion, norm: Norm, grid_n: usize) -> Result<Self> {
        Self::from_domain(Domain::new(domain, norm)?, grid_n)
    }

    pub fn from_domain(domain: Domain, grid_n: usize) -> Result<Self> {
        if grid_n < MIN_GRID {
            return Err(Error::InvalidArgument("oracle grid needs at least 1000 points"));
        }
        let (lo, hi) = (domain.rw_radius(), domain.inradius());
        let plaquettes = if hi > lo {
            uniform(lo, hi, grid_n)
                .map(|r| (r, domain.plaquette_area(r)))
                .collect()
        } else {
            Vec::new()
        };
        Ok(Self {
            domain,
            grid_n,
            plaquettes,
        })
    }

    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    pub fn grid_resolution(&self) -> usize {
        self.grid_n
    }

    /// Lowest energy over all grid-refined candidates for mass `m`.
    pub fn grid_min_energy(&self, m: f64) -> OracleReport {
        let mut best = Best::default();
        if m == 0.0 {
            best.energy = 0.0;
        } else if m > 0.0 && m.is_finite() {
            self.scan_a(m, &mut best);
            self.scan_b(m, &mut best);
            self.scan_c(m, &mut best);
            self.scan_d(m, &mut best);
        }
        OracleReport {
            best_energy: best.energy,
            best_descriptor: best.at,
            grid_resolution: self.grid_n,
            discrepancy: None,
        }
    }

    /// Runs the solver and the oracle on `m` and records their difference.
    pub fn verify(&self, m: f64) -> Result<(TowerProfile, OracleReport)> {
        let profile = TowerSolver::from_domain(self.domain.clone()).solve(m)?;
        let mut report = self.grid_min_energy(m);
        report.discrepancy = Some(report.best_energy - profile.energy);
        Ok((profile, report))
    }

    fn scan_a(&self, m: f64, best: &mut Best) {
        let d = &self.domain;
        let q: Vec<f64> = self.plaquettes.iter().map(|&(_, v)| m / v).collect();
        let xs: Vec<f64> = self.plaquettes.iter().map(|&(r, _)| r).collect();
        scan_cells(&xs, &q, 1, d.tolerance(), |k, a, b| {
            let kf = k as f64;
            let res = |r: f64| kf * d.plaquette_area(r) - m;
            let r = bisect(res, a, b, d.tolerance());
            if res(r).abs() <= MASS_RESIDUAL_TOL * m {
                best.offer(kf * d.plaquette_perimeter(r), TowerCase::A, k, r);
            }
        });
    }

    fn scan_b(&self, m: f64, best: &mut Best) {
        let d = &self.domain;
        let w = d.wulff_area();
        let (lo, hi) = (d.rw_radius(), d.inradius());
        let margin = 1e-12 * hi;
        let q: Vec<f64> = self
            .plaquettes
            .iter()
            .map(|&(r, v)| (m - r * r * w) / v)
            .collect();
        let xs: Vec<f64> = self.plaquettes.iter().map(|&(r, _)| r).collect();
        scan_cells(&xs, &q, 0, d.tolerance(), |k, a, b| {
            let kf = k as f64;
            let res = |r: f64| r * r * w + kf * d.plaquette_area(r) - m;
            let r = bisect(res, a, b, d.tolerance());
            if r <= lo + margin || r >= hi - margin || res(r).abs() > MASS_RESIDUAL_TOL * m {
                return;
            }
            let energy = 2.0 * r * w + kf * d.plaquette_perimeter(r);
            best.offer(energy, TowerCase::B, k + 1, r);
        });
    }

    fn scan_c(&self, m: f64, best: &mut Best) {
        let d = &self.domain;
        let rw = d.rw_radius();
        if rw <= 0.0 {
            return;
        }
        let (w, area, perimeter) = (d.wulff_area(), d.area(), d.perimeter());
        let xs: Vec<f64> = uniform(0.0, rw, self.grid_n).collect();
        let q: Vec<f64> = xs.iter().map(|&r| (m - r * r * w) / area).collect();
        scan_cells(&xs, &q, 0, d.tolerance(), |k, a, b| {
            let kf = k as f64;
            let res = |r: f64| r * r * w + kf * area - m;
            let r = bisect(res, a, b, d.tolerance());
            if r <= 0.0 || res(r).abs() > MASS_RESIDUAL_TOL * m {
                return;
            }
            best.offer(kf * perimeter + 2.0 * r * w, TowerCase::C, k + 1, r);
        });
    }

    fn scan_d(&self, m: f64, best: &mut Best) {
        let d = &self.domain;
        let len = d.center_length();
        if d.center_set().kind() != PolygonKind::Segment || len <= 0.0 {
            return;
        }
        let norm = d.norm();
        let xs: Vec<f64> = uniform(0.0, len, self.grid_n).collect();
        let q: Vec<f64> = xs.iter().map(|&l| m / d.stadium(l).area(norm)).collect();
        scan_cells(&xs, &q, 1, d.tolerance(), |k, a, b| {
            let kf = k as f64;
            let res = |l: f64| kf * d.stadium(l).area(norm) - m;
            let l = bisect(res, a, b, d.tolerance());
            if res(l).abs() <= MASS_RESIDUAL_TOL * m {
                best.offer(kf * d.stadium(l).perimeter_phi(norm), TowerCase::D, k, l);
            }
        });
    }
}

struct Best {
    energy: f64,
    at: Option<OracleCandidate>,
}

impl Default for Best {
    fn default() -> Self {
        Self {
            energy: f64::INFINITY,
            at: None,
        }
    }
}

impl Best {
    fn offer(&mut self, energy: f64, case: TowerCase, j_max: usize, param: f64) {
        if energy < self.energy {
            self.energy = energy;
            self.at = Some(OracleCandidate { case, j_max, param });
        }
    }
}

fn uniform(lo: f64, hi: f64, n: usize) -> impl Iterator<Item = f64> {
    (0..=n).map(move |i| lo + (hi - lo) * (i as f64 / n as f64))
}

/// Calls `visit(k, a, b)` for every integer `k ≥ k_min` lying between the
/// values of `q` at the ends of each cell `[a, b]`.
fn scan_cells(xs: &[f64], q: &[f64], k_min: usize, rel: f64, mut visit: impl FnMut(usize, f64, f64)) {
    for i in 0..xs.len().saturating_sub(1) {
        let (qa, qb) = (q[i], q[i + 1]);
        if !(qa.is_finite() && qb.is_finite()) {
            continue;
        }
        let (lo, hi) = (qa.min(qb), qa.max(qb));
        let slack = rel * hi.abs().max(1.0);
        let first = fmath::ceil(lo - slack).max(k_min as f64);
        let last = fmath::floor(hi + slack);
        let mut k = first;
        while k <= last {
            visit(k as usize, xs[i], xs[i + 1]);
            k += 1.0;
        }
    }
}

/// Oracle minimum for one spec, with a fresh grid.
pub fn grid_min_energy(spec: &ProblemSpec, grid_n: usize) -> Result<OracleReport> {
    Ok(Oracle::new(spec.domain.clone(), spec.norm.clone(), grid_n)?.grid_min_energy(spec.mass))
}

/// Area and `φ`-perimeter of `region` computed from an explicit polygon.
///
/// For the Euclidean norm each rounded corner is replaced by `segments`
/// chords of its arc. For a polygonal norm the rounded region is itself a
/// polygon (the Minkowski sum of the core and `ρW`), which is built exactly.
pub fn discretized_measure(region: &RoundedRegion, norm: &Norm, segments: usize) -> Result<(f64, f64)> {
    if segments < MIN_SEGMENTS {
        return Err(Error::InvalidArgument("discretization needs at least 64 segments per corner"));
    }
    let boundary = boundary_polygon(region, norm, segments);
    Ok((shoelace(&boundary), phi_perimeter(&boundary, norm)))
}

/// Boundary of `region` as a counterclockwise vertex list, using the same
/// discretization as [`discretized_measure`].
pub fn boundary_polygon(region: &RoundedRegion, norm: &Norm, segments: usize) -> Vec<Vec2> {
    let core = region.core.vertices();
    if core.is_empty() {
        return Vec::new();
    }
    if region.rho <= 0.0 {
        return core.to_vec();
    }
    match norm {
        Norm::Euclidean => euclidean_boundary(core, region.rho, segments),
        Norm::Polygon(w) => {
            let pts: Vec<Vec2> = core
                .iter()
                .flat_map(|&c| w.vertices().iter().map(move |&v| c + v * region.rho))
                .collect();
            convex_hull(pts)
        }
    }
}

fn euclidean_boundary(core: &[Vec2], rho: f64, segments: usize) -> Vec<Vec2> {
    let n = core.len();
    let mut out = Vec::with_capacity(n * (segments + 1));
    if n == 1 {
        for i in 0..segments {
            let t = 2.0 * PI * i as f64 / segments as f64;
            out.push(core[0] + Vec2::from_angle(t) * rho);
        }
        return out;
    }
    for i in 0..n {
        let prev = core[(i + n - 1) % n];
        let cur = core[i];
        let next = core[(i + 1) % n];
        let a0 = (cur - prev).perp_cw().angle();
        let mut sweep = (next - cur).perp_cw().angle() - a0;
        while sweep < 0.0 {
            sweep += 2.0 * PI;
        }
        if n == 2 && sweep < 1e-15 {
            sweep = PI;
        }
        for s in 0..=segments {
            let t = a0 + sweep * s as f64 / segments as f64;
            out.push(cur + Vec2::from_angle(t) * rho);
        }
    }
    out
}

/// Andrew's monotone chain, counterclockwise, collinear points dropped.
fn convex_hull(mut pts: Vec<Vec2>) -> Vec<Vec2> {
    pts.sort_by(|a, b| a.x.total_cmp(&b.x).then(a.y.total_cmp(&b.y)));
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let mut hull: Vec<Vec2> = Vec::with_capacity(2 * pts.len());
    for pass in 0..2 {
        let start = hull.len();
        let iter: &mut dyn Iterator<Item = &Vec2> = if pass == 0 {
            &mut pts.iter()
        } else {
            &mut pts.iter().rev()
        };
        for &p in iter {
            while hull.len() >= start + 2 {
                let (a, b) = (hull[hull.len() - 2], hull[hull.len() - 1]);
                if (b - a).cross(p - a) <= 0.0 {
                    hull.pop();
                } else {
                    break;
                }
            }
            hull.push(p);
        }
        hull.pop();
    }
    hull
}

fn shoelace(vs: &[Vec2]) -> f64 {
    let n = vs.len();
    if n < 3 {
        return 0.0;
    }
    0.5 * (0..n).map(|i| vs[i].cross(vs[(i + 1) % n])).sum::<f64>()
}

fn phi_perimeter(vs: &[Vec2], norm: &Norm) -> f64 {
    let n = vs.len();
    if n < 2 {
        return 0.0;
    }
    (0..n)
        .map(|i| norm.support((vs[(i + 1) % n] - vs[i]).perp_cw()))
        .sum()
}
