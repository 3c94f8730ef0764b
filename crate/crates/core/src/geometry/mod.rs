//! Convex-geometry kernel: gauges and support functions, anisotropic
//! perimeter, Minkowski erosion, Wulff plaquettes and the two domain radii.
//!
//! The plaquette `E^r` is the union of the Wulff balls of radius `r` inside
//! `E`. For convex `E` it equals `(E ⊖ rW_φ) ⊕ rW_φ`, which is how it is
//! computed here. For nonconvex sets the two differ (two discs joined by a
//! thin tube lose the tube), which is one reason nonconvex domains are
//! rejected throughout.

mod norm;
mod polygon;
mod region;
mod vec2;

pub use norm::{Facet, Norm, WulffPolygon};
pub use polygon::{ConvexPolygon, Edge, PolygonKind};
pub use region::RoundedRegion;
pub use vec2::Vec2;

pub(crate) use region::wulff_inradius;

use crate::roots::bisect_threshold;
use crate::{Error, Result, DEFAULT_BISECTION_TOL};

/// Vertex-coincidence tolerance relative to the domain diameter.
pub const VERTEX_TOL: f64 = 1e-12;

/// Slivers thinner than this (relative to the diameter) left over by the
/// inradius bisection are collapsed to their longest chord.
pub const CENTER_COLLAPSE_TOL: f64 = 1e-9;

/// Two edge normals closer than this angle are treated as parallel.
pub const CORNER_ANGLE_TOL: f64 = 1e-9;

/// `φ(v)`.
pub fn gauge(norm: &Norm, v: Vec2) -> f64 {
    norm.gauge(v)
}

/// `φ*(v)`, the support function of `W_φ`.
pub fn support(norm: &Norm, v: Vec2) -> f64 {
    norm.support(v)
}

/// Anisotropic perimeter of a convex polygon (degenerate chains allowed).
pub fn perimeter_phi(poly: &ConvexPolygon, norm: &Norm) -> f64 {
    poly.perimeter_phi(norm)
}

/// Exact area of `core ⊕ ρ W_φ`.
pub fn area(region: &RoundedRegion, norm: &Norm) -> f64 {
    region.area(norm)
}

/// Inner parallel body `region ⊖ r W_φ`.
pub fn erode(region: &RoundedRegion, norm: &Norm, r: f64) -> Result<RoundedRegion> {
    check_radius(r)?;
    Ok(region.erode(norm, r, region.tolerance(norm, VERTEX_TOL)))
}

/// Wulff plaquette `region^r`; empty when `r` exceeds the inradius.
pub fn plaquette(region: &RoundedRegion, norm: &Norm, r: f64) -> Result<RoundedRegion> {
    check_radius(r)?;
    if region.is_empty() {
        return Err(Error::InvalidArgument("empty domain"));
    }
    Ok(region.plaquette(norm, r, region.tolerance(norm, VERTEX_TOL)))
}

fn check_radius(r: f64) -> Result<()> {
    if !(r >= 0.0 && r.is_finite()) {
        return Err(Error::InvalidArgument("radius must be finite and non-negative"));
    }
    Ok(())
}

/// Anisotropic inradius `R_Ω` and the set of centers of inscribed Wulff balls
/// of that radius (always a point or a segment).
pub fn max_inscribed_radius(domain: &RoundedRegion, norm: &Norm) -> Result<(f64, ConvexPolygon)> {
    max_inscribed_radius_with_tol(domain, norm, DEFAULT_BISECTION_TOL)
}

/// [`max_inscribed_radius`] with an explicit relative bisection tolerance.
pub fn max_inscribed_radius_with_tol(
    domain: &RoundedRegion,
    norm: &Norm,
    rel_tol: f64,
) -> Result<(f64, ConvexPolygon)> {
    if domain.is_empty() {
        return Err(Error::InvalidArgument("empty domain"));
    }
    let core = &domain.core;
    if core.is_degenerate() {
        return Ok((domain.rho, core.clone()));
    }
    let eps = domain.tolerance(norm, VERTEX_TOL);
    // A Wulff ball of radius s has width ≥ 2 s inr(W) in every direction.
    // Nonemptiness is tested without clipping slack so the threshold is not
    // biased outward by the vertex tolerance.
    let nonempty = |s: f64| !core.erode(norm, s, 0.0).is_empty();
    let mut hi = core.diameter() / wulff_inradius(norm);
    while nonempty(hi) {
        hi *= 2.0;
    }
    let inner = bisect_threshold(nonempty, 0.0, hi, rel_tol);
    let centers = core.erode(norm, inner, eps);
    let collapse_eps = domain.tolerance(norm, CENTER_COLLAPSE_TOL);
    let mut centers = centers.collapse(collapse_eps);
    if centers.kind() == PolygonKind::Polygon {
        // Only reachable with very loose bisection tolerances.
        centers = centers.collapse(f64::INFINITY);
    }
    Ok((domain.rho + inner, centers))
}

/// `r_Ω`: the largest `r` with `Ω^r = Ω`.
///
/// Determined structurally. Under the Euclidean norm every vertex of a proper
/// core is a corner, so `r_Ω = ρ`. Under a polygonal norm a core vertex is a
/// corner unless its normal cone fits inside the normal cone of a single
/// Wulff vertex; without corners the core splits as `C' ⊕ tW` and `t` is
/// limited by the shortest edge relative to the matching Wulff facet.
/// Point and segment cores give `r_Ω = R_Ω = ρ`.
pub fn rw_condition_radius(domain: &RoundedRegion, norm: &Norm) -> Result<f64> {
    if domain.is_empty() {
        return Err(Error::InvalidArgument("empty domain"));
    }
    let core = &domain.core;
    let w = match norm {
        Norm::Polygon(w) if !core.is_degenerate() => w,
        _ => return Ok(domain.rho),
    };
    let edges: alloc::vec::Vec<Edge> = core.edges().collect();
    let n = edges.len();
    for i in 0..n {
        let prev = edges[(i + n - 1) % n].normal;
        let next = edges[i].normal;
        let (hp, hn) = (norm.support(prev), norm.support(next));
        let fits = w.vertices().iter().any(|v| {
            v.dot(prev) >= hp - CORNER_ANGLE_TOL * hp && v.dot(next) >= hn - CORNER_ANGLE_TOL * hn
        });
        if !fits {
            return Ok(domain.rho);
        }
    }
    let t = w
        .facets()
        .iter()
        .map(|f| {
            let len: f64 = edges
                .iter()
                .filter(|e| e.normal.cross(f.normal).abs() <= CORNER_ANGLE_TOL && e.normal.dot(f.normal) > 0.0)
                .map(|e| e.length)
                .sum();
            len / f.length
        })
        .fold(f64::INFINITY, f64::min);
    Ok(domain.rho + t)
}

/// `P_φ(E) − (|E| / |W_φ|)^{1/2} P_φ(W_φ)`, non-negative by the anisotropic
/// isoperimetric inequality and zero exactly on Wulff balls.
pub fn isoperimetric_deficit(region: &RoundedRegion, norm: &Norm) -> f64 {
    let wa = norm.wulff_area();
    region.perimeter_phi(norm) - crate::fmath::sqrt(region.area(norm) / wa) * norm.wulff_perimeter()
}
