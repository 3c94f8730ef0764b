use super::{ConvexPolygon, Norm, Vec2};
use crate::{Error, Result};

/// The set `core ⊕ rho·W_φ`.
///
/// Domains, plaquettes `Ω^r`, Wulff balls (point core) and stadiums (segment
/// core) are all of this form, and the class is closed under erosion and the
/// plaquette operation. The norm is not stored: the same region means
/// different sets under different norms.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct RoundedRegion {
    pub core: ConvexPolygon,
    pub rho: f64,
}

impl RoundedRegion {
    pub fn new(core: ConvexPolygon, rho: f64) -> Result<Self> {
        if !(rho >= 0.0 && rho.is_finite()) {
            return Err(Error::InvalidArgument("radius must be finite and non-negative"));
        }
        Ok(Self { core, rho })
    }

    pub fn polygon(core: ConvexPolygon) -> Self {
        Self { core, rho: 0.0 }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn wulff_ball(center: Vec2, r: f64) -> Self {
        Self {
            core: ConvexPolygon::point(center),
            rho: r,
        }
    }

    pub fn stadium(a: Vec2, b: Vec2, r: f64) -> Self {
        Self {
            core: ConvexPolygon::segment(a, b),
            rho: r,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.core.is_empty()
    }

    /// Steiner formula `|C| + ρ P_φ(C) + ρ² |W_φ|`.
    pub fn area(&self, norm: &Norm) -> f64 {
        if self.is_empty() {
            return 0.0;
        }
        self.core.area() + self.rho * self.core.perimeter_phi(norm) + self.rho * self.rho * norm.wulff_area()
    }

    /// `P_φ(C) + ρ P_φ(W_φ)`.
    pub fn perimeter_phi(&self, norm: &Norm) -> f64 {
        if self.is_empty() {
            return 0.0;
        }
        self.core.perimeter_phi(norm) + self.rho * norm.wulff_perimeter()
    }

    /// Euclidean diameter bound `diam(C) + 2 ρ max|W_φ|`.
    pub fn diameter(&self, norm: &Norm) -> f64 {
        self.core.diameter() + 2.0 * self.rho * norm.circumradius()
    }

    /// Absolute geometric tolerance for this region: `rel` times its diameter.
    pub fn tolerance(&self, norm: &Norm, rel: f64) -> f64 {
        rel * self.diameter(norm).max(f64::MIN_POSITIVE)
    }

    /// `(C ⊕ ρW) ⊖ rW`: shrink the radius first, then erode the core.
    pub fn erode(&self, norm: &Norm, r: f64, eps: f64) -> RoundedRegion {
        if self.is_empty() {
            return Self::empty();
        }
        if r <= self.rho {
            return Self {
                core: self.core.clone(),
                rho: self.rho - r,
            };
        }
        let core = self.core.erode(norm, r - self.rho, eps);
        if core.is_empty() {
            return Self::empty();
        }
        Self { core, rho: 0.0 }
    }

    /// Wulff plaquette `Ω^r`: the union of all Wulff balls of radius `r`
    /// inside the region, i.e. the erosion by `rW` dilated back by `rW`.
    /// Empty once `r` exceeds the inradius.
    pub fn plaquette(&self, norm: &Norm, r: f64, eps: f64) -> RoundedRegion {
        if r <= self.rho {
            return self.clone();
        }
        let eroded = self.erode(norm, r, eps);
        if eroded.is_empty() {
            return Self::empty();
        }
        Self {
            core: eroded.core,
            rho: r,
        }
    }

    pub fn translated(&self, d: Vec2) -> Self {
        Self {
            core: self.core.translated(d),
            rho: self.rho,
        }
    }

    pub fn scaled(&self, s: f64) -> Self {
        Self {
            core: self.core.scaled(s),
            rho: self.rho * s,
        }
    }

    /// Whether `inner ⊆ self` up to `eps` (a length).
    ///
    /// Uses the cancellation law for convex bodies: with `δ = ρ_out − ρ_in ≥ 0`
    /// the inner core must lie in `C_out ⊕ δW`; otherwise it must lie in
    /// `C_out ⊖ (−δ)W`.
    pub fn contains(&self, inner: &RoundedRegion, norm: &Norm, eps: f64) -> bool {
        if inner.is_empty() {
            return true;
        }
        if self.is_empty() {
            return false;
        }
        // Tolerance in Wulff-radius units.
        let w_eps = eps / wulff_inradius(norm);
        let delta = self.rho - inner.rho;
        if delta >= -w_eps {
            let delta = delta.max(0.0);
            return inner
                .core
                .vertices()
                .iter()
                .all(|p| self.core.gauge_distance(*p, norm) <= delta + w_eps);
        }
        let shrunk = self.core.erode(norm, -delta, eps);
        if shrunk.is_empty() {
            return false;
        }
        inner
            .core
            .vertices()
            .iter()
            .all(|p| shrunk.contains_point(*p, eps))
    }
}

/// Largest Euclidean ball inside `W_φ` (its smallest facet offset).
pub(crate) fn wulff_inradius(norm: &Norm) -> f64 {
    match norm {
        Norm::Euclidean => 1.0,
        Norm::Polygon(w) => w.facets().iter().map(|f| f.offset).fold(f64::INFINITY, f64::min),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::PI;

    #[test]
    fn steiner_area_examples() {
        let sq = RoundedRegion::polygon(ConvexPolygon::unit_square());
        assert_eq!(sq.area(&Norm::Euclidean), 1.0);
        assert_eq!(sq.area(&Norm::l1()), 1.0);
        let disc = RoundedRegion::wulff_ball(Vec2::ZERO, 0.3);
        assert!((disc.area(&Norm::Euclidean) - PI * 0.09).abs() < 1e-15);
        let r = 0.2;
        let rounded = RoundedRegion::new(
            ConvexPolygon::rectangle(1.0 - 2.0 * r, 1.0 - 2.0 * r).unwrap().translated(Vec2::new(r, r)),
            r,
        )
        .unwrap();
        assert!((rounded.area(&Norm::Euclidean) - (1.0 - (4.0 - PI) * r * r)).abs() < 1e-15);
    }

    #[test]
    fn perimeter_of_rounded_square() {
        let r = 0.25;
        let p = RoundedRegion::polygon(ConvexPolygon::unit_square()).plaquette(&Norm::Euclidean, r, 1e-12);
        assert!((p.perimeter_phi(&Norm::Euclidean) - (4.0 - 2.0 * (4.0 - PI) * r)).abs() < 1e-14);
        assert!((p.rho - r).abs() < 1e-15);
    }

    #[test]
    fn erode_consumes_radius_first() {
        let stadium = RoundedRegion::stadium(Vec2::ZERO, Vec2::new(1.0, 0.0), 0.5);
        let e = stadium.erode(&Norm::Euclidean, 0.2, 1e-12);
        assert_eq!(e.core, stadium.core);
        assert!((e.rho - 0.3).abs() < 1e-15);
        assert!(stadium.erode(&Norm::Euclidean, 0.6, 1e-12).is_empty());
    }

    #[test]
    fn plaquette_of_stadium_at_its_radius_is_identity() {
        let stadium = RoundedRegion::stadium(Vec2::ZERO, Vec2::new(1.0, 0.0), 0.5);
        assert_eq!(stadium.plaquette(&Norm::Euclidean, 0.5, 1e-12), stadium);
        assert_eq!(stadium.plaquette(&Norm::Euclidean, 0.0, 1e-12), stadium);
        assert!(stadium.plaquette(&Norm::Euclidean, 0.51, 1e-12).is_empty());
    }

    #[test]
    fn containment() {
        let n = Norm::Euclidean;
        let sq = RoundedRegion::polygon(ConvexPolygon::unit_square());
        let ball = RoundedRegion::wulff_ball(Vec2::new(0.5, 0.5), 0.5);
        assert!(sq.contains(&ball, &n, 1e-12));
        assert!(!ball.contains(&sq, &n, 1e-12));
        let off = RoundedRegion::wulff_ball(Vec2::new(0.5, 0.51), 0.5);
        assert!(!sq.contains(&off, &n, 1e-12));
        let plaq = sq.plaquette(&n, 0.3, 1e-12);
        assert!(sq.contains(&plaq, &n, 1e-12));
        assert!(plaq.contains(&RoundedRegion::wulff_ball(Vec2::new(0.5, 0.5), 0.3), &n, 1e-12));
        // A point outside the square but within the rounded corner of C ⊕ 0.1B.
        let rounded = RoundedRegion::new(ConvexPolygon::unit_square(), 0.1).unwrap();
        let p = RoundedRegion::wulff_ball(Vec2::new(1.06, 1.06), 0.0);
        assert!(rounded.contains(&p, &n, 1e-12));
        assert!(!rounded.contains(&p, &Norm::l1(), 1e-12));
    }
}
