//! The stacked problem: minimize `Σ_j P_φ(E_j)` over nested level sets
//! `E_1 ⊇ E_2 ⊇ … ⊇ E_ĵ` in `Ω` with `Σ_j |E_j| = m`.
//!
//! Every minimizer belongs to one of four families, indexed by the number of
//! layers `ĵ` and a common radius `r̄`:
//!
//! - **A**: `ĵ` copies of the plaquette `Ω^{r̄}`, `r̄ ∈ [r_Ω, R_Ω]`;
//! - **B**: `ĵ − 1` copies of `Ω^{r̄}` capped by a Wulff ball `W_{r̄}`,
//!   `r̄ ∈ (r_Ω, R_Ω)`;
//! - **C**: `ĵ − 1` copies of `Ω` capped by `W_{r̄}`, `r̄ ∈ (0, r_Ω]`;
//! - **D**: `ĵ` stadiums of radius `R_Ω` around nested sub-segments of the
//!   center segment.
//!
//! [`TowerSolver`] enumerates every family for every `ĵ` up to
//! `⌈m / (R_Ω² |W_φ|)⌉ + 1` (beyond that some layer would have to be smaller
//! than the inscribed ball), solves each mass equation and keeps the cheapest.

use alloc::vec::Vec;

use crate::geometry::{ConvexPolygon, Norm, PolygonKind, RoundedRegion};
use crate::isoperimetric::Domain;
use crate::roots::{bisect, golden_section_min};
use crate::{fmath, Error, Result};

/// Candidates whose energies agree to this relative tolerance are ties.
pub const TIE_TOL: f64 = 1e-9;

/// Number of cells in the bracketing grid for the family-B mass equation.
pub const B_BRACKET_CELLS: usize = 1024;

/// Relative mass mismatch above which a constructed profile is rejected,
/// unless a looser bisection tolerance was requested.
const MASS_CHECK_TOL: f64 = 1e-9;

/// Family of a tower minimizer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TowerCase {
    A,
    B,
    C,
    D,
}

impl TowerCase {
    pub fn label(self) -> &'static str {
        match self {
            TowerCase::A => "A",
            TowerCase::B => "B",
            TowerCase::C => "C",
            TowerCase::D => "D",
        }
    }

    pub fn from_label(s: &str) -> Option<Self> {
        match s {
            "A" | "a" => Some(TowerCase::A),
            "B" | "b" => Some(TowerCase::B),
            "C" | "c" => Some(TowerCase::C),
            "D" | "d" => Some(TowerCase::D),
            _ => None,
        }
    }
}

/// Shape of one level set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LayerKind {
    Plaquette,
    WulffBall,
    Stadium,
    FullDomain,
}

impl LayerKind {
    pub fn label(self) -> &'static str {
        match self {
            LayerKind::Plaquette => "plaquette",
            LayerKind::WulffBall => "wulff-ball",
            LayerKind::Stadium => "stadium",
            LayerKind::FullDomain => "full-domain",
        }
    }

    pub fn from_label(s: &str) -> Option<Self> {
        match s {
            "plaquette" => Some(LayerKind::Plaquette),
            "wulff-ball" => Some(LayerKind::WulffBall),
            "stadium" => Some(LayerKind::Stadium),
            "full-domain" => Some(LayerKind::FullDomain),
            _ => None,
        }
    }
}

/// One level set `E_j` of a tower.
#[derive(Clone, Debug, PartialEq)]
pub struct Layer {
    pub kind: LayerKind,
    pub region: RoundedRegion,
    /// Radius of the Wulff balls whose union forms the layer (`r_Ω` for the
    /// full domain).
    pub radius: f64,
    pub area: f64,
    pub perimeter: f64,
    pub unique: bool,
    /// Admissible ball centers or stadium center segment when not unique.
    pub center_freedom: ConvexPolygon,
}

/// A feasible `(family, ĵ)` pair and its energy.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Candidate {
    pub case: TowerCase,
    pub j_max: usize,
    /// Common radius (`R_Ω` for family D).
    pub r_bar: f64,
    pub energy: f64,
}

/// A minimizing tower `u = Σ_j 1_{E_j}`, layers listed bottom to top.
#[derive(Clone, Debug, PartialEq)]
pub struct TowerProfile {
    pub layers: Vec<Layer>,
    pub j_max: usize,
    /// `None` only for the empty profile of zero mass.
    pub case: Option<TowerCase>,
    pub r_bar: Option<f64>,
    pub energy: f64,
    pub mass: f64,
    /// Other candidates with the same energy up to [`TIE_TOL`].
    pub ties: Vec<Candidate>,
}

impl TowerProfile {
    pub fn empty() -> Self {
        Self {
            layers: Vec::new(),
            j_max: 0,
            case: None,
            r_bar: None,
            energy: 0.0,
            mass: 0.0,
            ties: Vec::new(),
        }
    }

    /// Number of distinct layer shapes, comparing regions up to `eps`.
    pub fn distinct_shapes(&self, eps: f64) -> usize {
        let mut reps: Vec<&RoundedRegion> = Vec::new();
        for l in &self.layers {
            let same = |r: &&RoundedRegion| {
                (r.rho - l.region.rho).abs() <= eps
                    && r.core.vertex_distance(&l.region.core).is_some_and(|d| d <= eps)
            };
            if !reps.iter().any(same) {
                reps.push(&l.region);
            }
        }
        reps.len()
    }
}

/// Input of the stacked problem.
#[derive(Clone, Debug, PartialEq)]
pub struct ProblemSpec {
    pub domain: RoundedRegion,
    pub norm: Norm,
    pub mass: f64,
}

impl ProblemSpec {
    pub fn new(domain: RoundedRegion, norm: Norm, mass: f64) -> Result<Self> {
        if !(mass >= 0.0 && mass.is_finite()) {
            return Err(Error::MassOutOfRange(mass));
        }
        if domain.is_empty() {
            return Err(Error::DegenerateDomain);
        }
        Ok(Self { domain, norm, mass })
    }
}

/// One row of an energy sweep.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CurvePoint {
    pub mass: f64,
    pub energy: f64,
    pub j_max: usize,
    pub case: Option<TowerCase>,
    pub r_bar: Option<f64>,
}

#[derive(Clone, Copy, Debug)]
enum Params {
    A { r: f64 },
    B { r: f64 },
    C { r: f64 },
    D,
}

#[derive(Clone, Copy, Debug)]
struct Feasible {
    candidate: Candidate,
    params: Params,
}

#[derive(Clone, Copy, Debug)]
struct GridPoint {
    r: f64,
    area: f64,
}

/// Solver for a fixed domain and norm; reusable across masses.
#[derive(Clone, Debug)]
pub struct TowerSolver {
    domain: Domain,
    grid: Vec<GridPoint>,
}

impl TowerSolver {
    pub fn new(domain: RoundedRegion, norm: Norm) -> Result<Self> {
        Ok(Self::from_domain(Domain::new(domain, norm)?))
    }

    pub fn from_domain(domain: Domain) -> Self {
        let (lo, hi) = (domain.rw_radius(), domain.inradius());
        let grid = if hi > lo {
            (0..=B_BRACKET_CELLS)
                .map(|i| {
                    let r = lo + (hi - lo) * (i as f64 / B_BRACKET_CELLS as f64);
                    GridPoint {
                        r,
                        area: domain.plaquette_area(r),
                    }
                })
                .collect()
        } else {
            Vec::new()
        };
        Self { domain, grid }
    }

    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    /// Range of layer counts worth enumerating for mass `m`.
    pub fn layer_range(&self, m: f64) -> (usize, usize) {
        layer_range(&self.domain, m)
    }

    /// Every feasible `(family, ĵ)` candidate for mass `m`, unsorted.
    pub fn candidates(&self, m: f64) -> Result<Vec<Candidate>> {
        Ok(self.feasible(m)?.into_iter().map(|f| f.candidate).collect())
    }

    fn feasible(&self, m: f64) -> Result<Vec<Feasible>> {
        if !(m >= 0.0 && m.is_finite()) {
            return Err(Error::MassOutOfRange(m));
        }
        let mut out = Vec::new();
        if m == 0.0 {
            return Ok(out);
        }
        let (j_lo, j_hi) = self.layer_range(m);
        for j in j_lo..=j_hi {
            self.family_a(m, j, &mut out);
            self.family_b(m, j, &mut out);
            self.family_c(m, j, &mut out);
            self.family_d(m, j, &mut out);
        }
        Ok(out)
    }

    fn family_a(&self, m: f64, j: usize, out: &mut Vec<Feasible>) {
        let d = &self.domain;
        if let Some(r) = d.radius_for_area(m / j as f64) {
            out.push(Feasible {
                candidate: Candidate {
                    case: TowerCase::A,
                    j_max: j,
                    r_bar: r,
                    energy: j as f64 * d.plaquette_perimeter(r),
                },
                params: Params::A { r },
            });
        }
    }

    /// Family B solves `r² |W| + (ĵ − 1) v(r) = m` on `(r_Ω, R_Ω)`. The left
    /// side need not be monotone, so every sign change on the bracketing grid
    /// is refined and the cheapest root kept.
    fn family_b(&self, m: f64, j: usize, out: &mut Vec<Feasible>) {
        if self.grid.len() < 2 {
            return;
        }
        let d = &self.domain;
        let w = d.wulff_area();
        let k = (j - 1) as f64;
        let mass = |r: f64, area: f64| r * r * w + k * area - m;
        let zero_tol = 1e-12 * m;
        let (lo, hi) = (d.rw_radius(), d.inradius());
        let margin = 1e-12 * hi;
        let mut best: Option<(f64, f64)> = None;
        let mut consider = |r: f64| {
            if r <= lo + margin || r >= hi - margin {
                return;
            }
            let energy = 2.0 * r * w + k * d.plaquette_perimeter(r);
            if best.map_or(true, |(_, e)| energy < e) {
                best = Some((r, energy));
            }
        };
        let values: Vec<f64> = self.grid.iter().map(|g| mass(g.r, g.area)).collect();
        for i in 0..self.grid.len() - 1 {
            let (ga, gb) = (values[i], values[i + 1]);
            if ga.abs() <= zero_tol {
                consider(self.grid[i].r);
                continue;
            }
            if gb.abs() <= zero_tol {
                continue;
            }
            if (ga < 0.0) != (gb < 0.0) {
                let r = bisect(
                    |r| mass(r, d.plaquette_area(r)),
                    self.grid[i].r,
                    self.grid[i + 1].r,
                    d.tolerance(),
                );
                consider(r);
            }
        }
        if let Some((r, energy)) = best {
            out.push(Feasible {
                candidate: Candidate {
                    case: TowerCase::B,
                    j_max: j,
                    r_bar: r,
                    energy,
                },
                params: Params::B { r },
            });
        }
    }

    fn family_c(&self, m: f64, j: usize, out: &mut Vec<Feasible>) {
        let d = &self.domain;
        let rw = d.rw_radius();
        if rw <= 0.0 {
            return;
        }
        let top = m - (j - 1) as f64 * d.area();
        if top <= 0.0 {
            return;
        }
        let w = d.wulff_area();
        let r = fmath::sqrt(top / w);
        if r > rw * (1.0 + 1e-12) {
            return;
        }
        let r = r.min(rw);
        out.push(Feasible {
            candidate: Candidate {
                case: TowerCase::C,
                j_max: j,
                r_bar: r,
                energy: (j - 1) as f64 * d.perimeter() + 2.0 * r * w,
            },
            params: Params::C { r },
        });
    }

    fn family_d(&self, m: f64, j: usize, out: &mut Vec<Feasible>) {
        let d = &self.domain;
        let len = d.center_length();
        if d.center_set().kind() != PolygonKind::Segment || len <= 0.0 {
            return;
        }
        let big_r = d.inradius();
        let h = d.center_normal_support();
        let jf = j as f64;
        let lower = jf * d.ball_ceiling();
        let upper = jf * (d.ball_ceiling() + 2.0 * big_r * h * len);
        if m < lower * (1.0 - 1e-12) || m > upper * (1.0 + 1e-12) {
            return;
        }
        out.push(Feasible {
            candidate: Candidate {
                case: TowerCase::D,
                j_max: j,
                r_bar: big_r,
                energy: jf * big_r * d.wulff_area() + m / big_r,
            },
            params: Params::D,
        });
    }

    /// Minimum-energy tower for mass `m ≥ 0`.
    pub fn solve(&self, m: f64) -> Result<TowerProfile> {
        let feasible = self.feasible(m)?;
        if m == 0.0 {
            return Ok(TowerProfile::empty());
        }
        let best_energy = feasible
            .iter()
            .map(|f| f.candidate.energy)
            .fold(f64::INFINITY, f64::min);
        if !best_energy.is_finite() {
            return Err(Error::MassOutOfRange(m));
        }
        let cutoff = best_energy + TIE_TOL * best_energy.abs().max(1e-300);
        let mut tied: Vec<Feasible> = feasible
            .into_iter()
            .filter(|f| f.candidate.energy <= cutoff)
            .collect();
        tied.sort_by(|a, b| {
            (a.candidate.j_max, a.candidate.case).cmp(&(b.candidate.j_max, b.candidate.case))
        });
        let winner = tied[0];
        let ties = tied[1..].iter().map(|f| f.candidate).collect();
        let layers = self.build_layers(m, &winner);
        let energy: f64 = layers.iter().map(|l| l.perimeter).sum();
        let mass: f64 = layers.iter().map(|l| l.area).sum();
        let allowed = MASS_CHECK_TOL.max(100.0 * self.domain.tolerance());
        if (mass - m).abs() > allowed * m {
            return Err(Error::InvariantViolation("tower mass does not match the constraint"));
        }
        Ok(TowerProfile {
            j_max: layers.len(),
            layers,
            case: Some(winner.candidate.case),
            r_bar: Some(winner.candidate.r_bar),
            energy,
            mass,
            ties,
        })
    }

    fn build_layers(&self, m: f64, f: &Feasible) -> Vec<Layer> {
        let d = &self.domain;
        let norm = d.norm();
        let j = f.candidate.j_max;
        let plaquette_layer = |r: f64| {
            if r <= d.rw_radius() {
                self.full_domain_layer()
            } else {
                let region = d.plaquette(r);
                Layer {
                    kind: LayerKind::Plaquette,
                    area: region.area(norm),
                    perimeter: region.perimeter_phi(norm),
                    region,
                    radius: r,
                    unique: true,
                    center_freedom: ConvexPolygon::empty(),
                }
            }
        };
        let ball_layer = |r: f64| {
            let region = d.ball(r);
            let centers = d.ball_centers(r);
            let unique = centers.kind() == PolygonKind::Point;
            Layer {
                kind: LayerKind::WulffBall,
                area: region.area(norm),
                perimeter: region.perimeter_phi(norm),
                region,
                radius: r,
                unique,
                center_freedom: if unique { ConvexPolygon::empty() } else { centers },
            }
        };
        let mut layers = Vec::with_capacity(j);
        match f.params {
            Params::A { r } => {
                let layer = plaquette_layer(r);
                layers.resize(j, layer);
            }
            Params::B { r } => {
                layers.resize(j - 1, plaquette_layer(r));
                layers.push(ball_layer(r));
            }
            Params::C { r } => {
                layers.resize(j - 1, self.full_domain_layer());
                layers.push(ball_layer(r));
            }
            Params::D => {
                let big_r = d.inradius();
                let len = d.center_length();
                let per_length = 2.0 * big_r * d.center_normal_support();
                let mut remaining = ((m - j as f64 * d.ball_ceiling()) / per_length).max(0.0);
                for _ in 0..j {
                    let l = remaining.min(len);
                    remaining -= l;
                    let region = d.stadium(l);
                    let unique = l >= len;
                    layers.push(Layer {
                        kind: LayerKind::Stadium,
                        area: region.area(norm),
                        perimeter: region.perimeter_phi(norm),
                        region,
                        radius: big_r,
                        unique,
                        center_freedom: if unique { ConvexPolygon::empty() } else { d.center_set().clone() },
                    });
                }
            }
        }
        layers
    }

    fn full_domain_layer(&self) -> Layer {
        let d = &self.domain;
        Layer {
            kind: LayerKind::FullDomain,
            region: d.region().clone(),
            radius: d.rw_radius(),
            area: d.area(),
            perimeter: d.perimeter(),
            unique: true,
            center_freedom: ConvexPolygon::empty(),
        }
    }

    /// Solves every mass and checks that the energy is nondecreasing in `m`.
    pub fn energy_curve(&self, masses: &[f64]) -> Result<Vec<CurvePoint>> {
        let points = masses
            .iter()
            .map(|&m| {
                self.solve(m).map(|p| CurvePoint {
                    mass: m,
                    energy: p.energy,
                    j_max: p.j_max,
                    case: p.case,
                    r_bar: p.r_bar,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        check_monotone(&points)?;
        Ok(points)
    }

    /// Limit shape of `u_m / ĵ` as `m → ∞`: the plaquette minimizing
    /// `P_φ(Ω^r) / |Ω^r|`.
    ///
    /// Golden-section search locates the minimizer; it is then polished with
    /// the first-order condition `|Ω ⊖ rW| = r² |W|`, which the ratio's
    /// derivative reduces to and which bisection resolves well below the
    /// square-root-of-epsilon floor of a pure comparison search.
    pub fn cheeger_limit(&self) -> (f64, RoundedRegion) {
        let d = &self.domain;
        let (lo, hi) = (d.rw_radius(), d.inradius());
        let ratio = |r: f64| {
            let (a, p) = d.plaquette_measures(r);
            p / a
        };
        let mut r = golden_section_min(ratio, lo, hi, 1e-10);
        let w = d.wulff_area();
        let norm = d.norm();
        let condition = |r: f64| d.region().erode(norm, r, d.eps()).area(norm) - r * r * w;
        let span = 1e-6 * hi.max(f64::MIN_POSITIVE);
        let (a, b) = ((r - span).max(lo), (r + span).min(hi));
        if b > a && condition(a) > 0.0 && condition(b) < 0.0 {
            r = bisect(condition, a, b, d.tolerance());
        }
        (r, d.plaquette(r))
    }
}

pub(crate) fn layer_range(d: &Domain, m: f64) -> (usize, usize) {
    let lo = fmath::ceil(m / d.area() - 1e-12).max(1.0) as usize;
    let hi = fmath::ceil(m / d.ball_ceiling()) as usize + 1;
    (lo, hi.max(lo))
}

/// Fails when the energy decreases between two masses of a sweep.
pub fn check_monotone(points: &[CurvePoint]) -> Result<()> {
    let mut sorted: Vec<&CurvePoint> = points.iter().collect();
    sorted.sort_by(|a, b| a.mass.total_cmp(&b.mass));
    for w in sorted.windows(2) {
        if w[1].energy < w[0].energy - TIE_TOL * w[0].energy.abs().max(1.0) {
            return Err(Error::InvariantViolation("energy decreased with increasing mass"));
        }
    }
    Ok(())
}

/// Solves the stacked problem for one spec.
pub fn solve_tower(spec: &ProblemSpec) -> Result<TowerProfile> {
    if spec.mass == 0.0 {
        return Ok(TowerProfile::empty());
    }
    TowerSolver::new(spec.domain.clone(), spec.norm.clone())?.solve(spec.mass)
}

/// Energy sweep over `masses` for a fixed domain and norm.
pub fn energy_curve(domain: &RoundedRegion, norm: &Norm, masses: &[f64]) -> Result<Vec<CurvePoint>> {
    TowerSolver::new(domain.clone(), norm.clone())?.energy_curve(masses)
}

/// Radius and shape of the normalized large-mass limit (the Cheeger set).
pub fn cheeger_limit(domain: &RoundedRegion, norm: &Norm) -> Result<(f64, RoundedRegion)> {
    Ok(TowerSolver::new(domain.clone(), norm.clone())?.cheeger_limit())
}
