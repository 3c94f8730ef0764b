use alloc::vec::Vec;
use core::f64::consts::PI;

use super::Vec2;
use crate::{Error, Result};

/// Relative tolerance used when validating Wulff polygons.
const WULFF_TOL: f64 = 1e-12;

/// The anisotropy `φ`, given through its unit ball `W_φ`.
///
/// `gauge` evaluates `φ` and `support` evaluates the dual `φ*`, which is the
/// support function of `W_φ` and the surface tension in the perimeter.
#[derive(Clone, Debug, PartialEq)]
pub enum Norm {
    Euclidean,
    Polygon(WulffPolygon),
}

/// One edge of a Wulff polygon: `{x : normal · x ≤ offset}` with a unit
/// outward normal.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Facet {
    pub normal: Vec2,
    pub offset: f64,
    pub length: f64,
}

/// A centrally symmetric, strictly convex polygon containing the origin,
/// stored counterclockwise.
#[derive(Clone, Debug, PartialEq)]
pub struct WulffPolygon {
    vertices: Vec<Vec2>,
    facets: Vec<Facet>,
    area: f64,
}

impl WulffPolygon {
    /// Validates and normalizes a vertex chain. Clockwise input is reversed;
    /// anything that is not a strictly convex, centrally symmetric polygon
    /// with at least four vertices is rejected.
    pub fn new(mut vertices: Vec<Vec2>) -> Result<Self> {
        if vertices.len() < 4 {
            return Err(Error::InvalidNorm("needs at least four vertices"));
        }
        if vertices.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidNorm("non-finite vertex"));
        }
        let scale = vertices.iter().map(|v| v.norm()).fold(0.0, f64::max);
        if scale <= 0.0 {
            return Err(Error::InvalidNorm("all vertices at the origin"));
        }
        let signed = signed_area(&vertices);
        if signed.abs() <= WULFF_TOL * scale * scale {
            return Err(Error::InvalidNorm("zero area"));
        }
        if signed < 0.0 {
            vertices.reverse();
        }
        let n = vertices.len();
        for i in 0..n {
            let a = vertices[i];
            let b = vertices[(i + 1) % n];
            let c = vertices[(i + 2) % n];
            if (b - a).cross(c - b) <= WULFF_TOL * scale * scale {
                return Err(Error::InvalidNorm("not strictly convex"));
            }
        }
        // Strict convexity with positive turns everywhere still admits
        // self-overlapping stars; total turning must be one revolution.
        let mut turning = 0.0;
        for i in 0..n {
            let e0 = vertices[(i + 1) % n] - vertices[i];
            let e1 = vertices[(i + 2) % n] - vertices[(i + 1) % n];
            turning += crate::fmath::atan2(e0.cross(e1), e0.dot(e1));
        }
        if (turning - 2.0 * PI).abs() > 1e-6 {
            return Err(Error::InvalidNorm("not a simple polygon"));
        }
        for v in &vertices {
            let mirrored = vertices
                .iter()
                .map(|w| (*v + *w).norm())
                .fold(f64::INFINITY, f64::min);
            if mirrored > WULFF_TOL * scale {
                return Err(Error::InvalidNorm("not centrally symmetric"));
            }
        }
        let facets = (0..n)
            .map(|i| {
                let a = vertices[i];
                let b = vertices[(i + 1) % n];
                let edge = b - a;
                let length = edge.norm();
                let normal = edge.perp_cw() * (1.0 / length);
                Facet {
                    normal,
                    offset: normal.dot(a),
                    length,
                }
            })
            .collect();
        Ok(Self {
            area: signed.abs(),
            vertices,
            facets,
        })
    }

    pub fn vertices(&self) -> &[Vec2] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    pub fn area(&self) -> f64 {
        self.area
    }
}

fn signed_area(vs: &[Vec2]) -> f64 {
    let n = vs.len();
    (0..n).map(|i| vs[i].cross(vs[(i + 1) % n])).sum::<f64>() * 0.5
}

impl Norm {
    /// The ℓ¹ norm `|x| + |y|`, whose Wulff shape is the unit diamond.
    pub fn l1() -> Self {
        Norm::Polygon(
            WulffPolygon::new(alloc::vec![
                Vec2::new(1.0, 0.0),
                Vec2::new(0.0, 1.0),
                Vec2::new(-1.0, 0.0),
                Vec2::new(0.0, -1.0),
            ])
            .expect("diamond is a valid Wulff polygon"),
        )
    }

    /// The ℓ∞ norm, whose Wulff shape is the square `[-1, 1]²`.
    pub fn linf() -> Self {
        Norm::Polygon(
            WulffPolygon::new(alloc::vec![
                Vec2::new(1.0, -1.0),
                Vec2::new(1.0, 1.0),
                Vec2::new(-1.0, 1.0),
                Vec2::new(-1.0, -1.0),
            ])
            .expect("square is a valid Wulff polygon"),
        )
    }

    pub fn polygon(vertices: Vec<Vec2>) -> Result<Self> {
        WulffPolygon::new(vertices).map(Norm::Polygon)
    }

    pub fn is_polygonal(&self) -> bool {
        matches!(self, Norm::Polygon(_))
    }

    /// `φ(v)`: the smallest `λ ≥ 0` with `v ∈ λ W_φ`.
    pub fn gauge(&self, v: Vec2) -> f64 {
        match self {
            Norm::Euclidean => v.norm(),
            Norm::Polygon(w) => w
                .facets
                .iter()
                .map(|f| f.normal.dot(v) / f.offset)
                .fold(0.0, f64::max),
        }
    }

    /// `φ*(v) = max { v · w : w ∈ W_φ }`.
    pub fn support(&self, v: Vec2) -> f64 {
        match self {
            Norm::Euclidean => v.norm(),
            Norm::Polygon(w) => w
                .vertices
                .iter()
                .map(|p| p.dot(v))
                .fold(f64::NEG_INFINITY, f64::max),
        }
    }

    /// A point of `∂W_φ` where `v` is an outward normal.
    pub fn support_point(&self, v: Vec2) -> Vec2 {
        match self {
            Norm::Euclidean => v.normalized(),
            Norm::Polygon(w) => {
                let mut best = w.vertices[0];
                let mut best_val = best.dot(v);
                for p in &w.vertices[1..] {
                    let val = p.dot(v);
                    if val > best_val {
                        best = *p;
                        best_val = val;
                    }
                }
                best
            }
        }
    }

    /// `|W_φ|`.
    pub fn wulff_area(&self) -> f64 {
        match self {
            Norm::Euclidean => PI,
            Norm::Polygon(w) => w.area,
        }
    }

    /// `P_φ(W_φ)`, which equals `2 |W_φ|` in the plane.
    pub fn wulff_perimeter(&self) -> f64 {
        match self {
            Norm::Euclidean => 2.0 * PI,
            Norm::Polygon(w) => w
                .facets
                .iter()
                .map(|f| f.length * self.support(f.normal))
                .sum(),
        }
    }

    /// Largest Euclidean radius of `W_φ`; converts Wulff radii into lengths.
    pub fn circumradius(&self) -> f64 {
        match self {
            Norm::Euclidean => 1.0,
            Norm::Polygon(w) => w.vertices.iter().map(|v| v.norm()).fold(0.0, f64::max),
        }
    }
}
