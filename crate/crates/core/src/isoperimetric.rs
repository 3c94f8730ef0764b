//! The single-layer problem `min { P_φ(E) : E ⊂ Ω, |E| = m }` on a convex
//! domain.
//!
//! Writing `v(r) = |Ω^r|`, the function `v` equals `|Ω|` up to `r_Ω`, then
//! decreases continuously to `A* = |Ω^{R_Ω}|` at `R_Ω`. With
//! `B* = R_Ω² |W_φ|` the minimizers are:
//!
//! - `m > A*`: the plaquette `Ω^{r_m}` with `v(r_m) = m`;
//! - `B* < m ≤ A*`: a stadium of radius `R_Ω` around part of the center set;
//! - `m ≤ B*`: a Wulff ball of radius `√(m / |W_φ|)`.
//!
//! The last two are not unique in general, so solutions report the freedom
//! they were picked from.

use alloc::vec::Vec;

use crate::geometry::{self, ConvexPolygon, Norm, PolygonKind, RoundedRegion, Vec2};
use crate::roots::bisect;
use crate::{fmath, Error, Result, DEFAULT_BISECTION_TOL};

/// A relative gap below this is treated as equality of masses.
const MASS_EQ_TOL: f64 = 1e-12;

/// Shape class of an isoperimetric minimizer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IsoCase {
    Plaquette,
    Stadium,
    Ball,
}

/// Minimizer of the constrained isoperimetric problem for one mass.
#[derive(Clone, Debug, PartialEq)]
pub struct IsoperimetricSolution {
    pub case: IsoCase,
    /// Canonical representative.
    pub shape: RoundedRegion,
    /// `r_m` for plaquettes, `R_Ω` for stadiums, the ball radius for balls.
    pub r: f64,
    pub perimeter: f64,
    pub unique: bool,
    /// Admissible centers (balls) or the full center segment (stadiums);
    /// empty when the minimizer is unique.
    pub center_freedom: ConvexPolygon,
}

/// A convex domain together with a norm and everything derived from the
/// pair: area, both radii, the inradius center set and the two case
/// thresholds `A*`, `B*`.
#[derive(Clone, Debug, PartialEq)]
pub struct Domain {
    region: RoundedRegion,
    norm: Norm,
    area: f64,
    inradius: f64,
    rw_radius: f64,
    center_set: ConvexPolygon,
    plaquette_floor: f64,
    ball_ceiling: f64,
    eps: f64,
    tol: f64,
}

impl Domain {
    pub fn new(region: RoundedRegion, norm: Norm) -> Result<Self> {
        Self::with_tolerance(region, norm, DEFAULT_BISECTION_TOL)
    }

    /// Uses `tol` as the relative tolerance of every bisection.
    pub fn with_tolerance(region: RoundedRegion, norm: Norm, tol: f64) -> Result<Self> {
        if !(tol > 0.0 && tol < 1.0) {
            return Err(Error::InvalidArgument("bisection tolerance must lie in (0, 1)"));
        }
        if region.is_empty() {
            return Err(Error::DegenerateDomain);
        }
        let area = region.area(&norm);
        if !(area > 0.0 && area.is_finite()) {
            return Err(Error::DegenerateDomain);
        }
        let eps = region.tolerance(&norm, geometry::VERTEX_TOL);
        let (inradius, center_set) = geometry::max_inscribed_radius_with_tol(&region, &norm, tol)?;
        let rw_radius = geometry::rw_condition_radius(&region, &norm)?.min(inradius);
        let plaquette_floor = RoundedRegion {
            core: center_set.clone(),
            rho: inradius,
        }
        .area(&norm);
        let ball_ceiling = inradius * inradius * norm.wulff_area();
        Ok(Self {
            region,
            norm,
            area,
            inradius,
            rw_radius,
            center_set,
            plaquette_floor,
            ball_ceiling,
            eps,
            tol,
        })
    }

    pub fn region(&self) -> &RoundedRegion {
        &self.region
    }

    pub fn norm(&self) -> &Norm {
        &self.norm
    }

    /// `|Ω|`.
    pub fn area(&self) -> f64 {
        self.area
    }

    /// `P_φ(Ω)`.
    pub fn perimeter(&self) -> f64 {
        self.region.perimeter_phi(&self.norm)
    }

    /// `R_Ω`.
    pub fn inradius(&self) -> f64 {
        self.inradius
    }

    /// `r_Ω`.
    pub fn rw_radius(&self) -> f64 {
        self.rw_radius
    }

    /// Centers of the inscribed Wulff balls of radius `R_Ω`.
    pub fn center_set(&self) -> &ConvexPolygon {
        &self.center_set
    }

    /// `A* = |Ω^{R_Ω}|`.
    pub fn plaquette_floor(&self) -> f64 {
        self.plaquette_floor
    }

    /// `B* = R_Ω² |W_φ|`.
    pub fn ball_ceiling(&self) -> f64 {
        self.ball_ceiling
    }

    pub fn wulff_area(&self) -> f64 {
        self.norm.wulff_area()
    }

    /// Absolute vertex tolerance used for erosions of this domain.
    pub fn eps(&self) -> f64 {
        self.eps
    }

    pub fn tolerance(&self) -> f64 {
        self.tol
    }

    /// Midpoint of the center set; every ball of radius at most `R_Ω` centered
    /// here lies in every plaquette of the domain.
    pub fn canonical_center(&self) -> Vec2 {
        self.center_set.center().expect("center set is nonempty")
    }

    /// Length `L` of the center segment (zero for a point).
    pub fn center_length(&self) -> f64 {
        self.center_set.diameter()
    }

    /// `φ*(ν)` for the unit normal `ν` of the center segment; by the
    /// Steiner formula a stadium of radius `R` grows by `2 R φ*(ν)` in area
    /// per unit of segment length.
    pub fn center_normal_support(&self) -> f64 {
        match self.center_set.vertices() {
            [a, b] => self.norm.support((*b - *a).perp_cw().normalized()),
            _ => 0.0,
        }
    }

    /// `Ω^r`, with `Ω` itself returned for `r ≤ r_Ω`.
    pub fn plaquette(&self, r: f64) -> RoundedRegion {
        if r <= self.rw_radius {
            return self.region.clone();
        }
        if r >= self.inradius {
            return RoundedRegion {
                core: self.center_set.clone(),
                rho: self.inradius,
            };
        }
        self.region.plaquette(&self.norm, r, self.eps)
    }

    /// `v(r) = |Ω^r|`.
    pub fn plaquette_area(&self, r: f64) -> f64 {
        if r <= self.rw_radius {
            return self.area;
        }
        self.plaquette(r).area(&self.norm)
    }

    /// `P_φ(Ω^r)`.
    pub fn plaquette_perimeter(&self, r: f64) -> f64 {
        self.plaquette(r).perimeter_phi(&self.norm)
    }

    /// Both `v(r)` and `P_φ(Ω^r)` from a single erosion.
    pub fn plaquette_measures(&self, r: f64) -> (f64, f64) {
        let p = self.plaquette(r);
        (p.area(&self.norm), p.perimeter_phi(&self.norm))
    }

    /// The radius `r ∈ [r_Ω, R_Ω]` with `v(r) = target`, or `None` when
    /// `target` lies outside `[A*, |Ω|]`.
    pub fn radius_for_area(&self, target: f64) -> Option<f64> {
        if target > self.area * (1.0 + MASS_EQ_TOL) || target < self.plaquette_floor * (1.0 - MASS_EQ_TOL) {
            return None;
        }
        if target >= self.area * (1.0 - MASS_EQ_TOL * 1e-2) {
            return Some(self.rw_radius);
        }
        if target <= self.plaquette_floor {
            return Some(self.inradius);
        }
        Some(bisect(
            |r| self.plaquette_area(r) - target,
            self.rw_radius,
            self.inradius,
            self.tol,
        ))
    }

    /// Wulff ball of radius `r` at the canonical center.
    pub fn ball(&self, r: f64) -> RoundedRegion {
        RoundedRegion::wulff_ball(self.canonical_center(), r)
    }

    /// Centers `x` with `W_r(x) ⊂ Ω`.
    pub fn ball_centers(&self, r: f64) -> ConvexPolygon {
        if r >= self.inradius {
            return self.center_set.clone();
        }
        self.region.erode(&self.norm, r, self.eps).core
    }

    /// Stadium of radius `R_Ω` around the centered sub-segment of length
    /// `len` (clamped to the center segment).
    pub fn stadium(&self, len: f64) -> RoundedRegion {
        match self.center_set.vertices() {
            [a, b] => {
                let full = a.distance(*b);
                let t = if full > 0.0 { (len / full).clamp(0.0, 1.0) } else { 0.0 };
                let mid = a.lerp(*b, 0.5);
                let half = (*b - *a) * (0.5 * t);
                RoundedRegion {
                    core: ConvexPolygon::segment(mid - half, mid + half),
                    rho: self.inradius,
                }
            }
            _ => self.ball(self.inradius),
        }
    }

    /// Solves the single-layer problem for mass `m ∈ (0, |Ω|]`.
    pub fn solve_isoperimetric(&self, m: f64) -> Result<IsoperimetricSolution> {
        if !(m > 0.0 && m.is_finite()) || m > self.area * (1.0 + MASS_EQ_TOL) {
            return Err(Error::MassOutOfRange(m));
        }
        let norm = &self.norm;
        if m > self.plaquette_floor {
            let r = self.radius_for_area(m).ok_or(Error::MassOutOfRange(m))?;
            let shape = self.plaquette(r);
            return Ok(IsoperimetricSolution {
                case: IsoCase::Plaquette,
                perimeter: shape.perimeter_phi(norm),
                shape,
                r,
                unique: true,
                center_freedom: ConvexPolygon::empty(),
            });
        }
        if m > self.ball_ceiling {
            let len = self.center_length();
            let h = self.center_normal_support();
            let l = if h > 0.0 {
                ((m - self.ball_ceiling) / (2.0 * self.inradius * h)).clamp(0.0, len)
            } else {
                0.0
            };
            let shape = self.stadium(l);
            let unique = !(len > 0.0 && l < len);
            return Ok(IsoperimetricSolution {
                case: IsoCase::Stadium,
                perimeter: shape.perimeter_phi(norm),
                shape,
                r: self.inradius,
                unique,
                center_freedom: if unique { ConvexPolygon::empty() } else { self.center_set.clone() },
            });
        }
        let r = fmath::sqrt(m / norm.wulff_area()).min(self.inradius);
        let shape = self.ball(r);
        let centers = self.ball_centers(r);
        let unique = centers.kind() == PolygonKind::Point;
        Ok(IsoperimetricSolution {
            case: IsoCase::Ball,
            perimeter: shape.perimeter_phi(norm),
            shape,
            r,
            unique,
            center_freedom: if unique { ConvexPolygon::empty() } else { centers },
        })
    }

    /// Minimizers for strictly decreasing masses, arranged so that each
    /// shape contains the next.
    pub fn nested_family(&self, masses: &[f64]) -> Result<Vec<IsoperimetricSolution>> {
        if masses.windows(2).any(|w| !(w[0] > w[1])) {
            return Err(Error::InvalidArgument("masses must be strictly decreasing"));
        }
        let family = masses
            .iter()
            .map(|&m| self.solve_isoperimetric(m))
            .collect::<Result<Vec<_>>>()?;
        let eps = self.region.tolerance(&self.norm, 1e-9);
        for pair in family.windows(2) {
            if !pair[0].shape.contains(&pair[1].shape, &self.norm, eps) {
                return Err(Error::InvariantViolation("isoperimetric family is not nested"));
            }
        }
        Ok(family)
    }
}

/// Solves `min { P_φ(E) : E ⊂ Ω, |E| = m }`.
pub fn solve_isoperimetric(domain: &RoundedRegion, norm: &Norm, m: f64) -> Result<IsoperimetricSolution> {
    Domain::new(domain.clone(), norm.clone())?.solve_isoperimetric(m)
}

/// Nested minimizers for a strictly decreasing list of masses.
pub fn nested_family(
    domain: &RoundedRegion,
    norm: &Norm,
    masses: &[f64],
) -> Result<Vec<IsoperimetricSolution>> {
    Domain::new(domain.clone(), norm.clone())?.nested_family(masses)
}
