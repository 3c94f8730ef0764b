use alloc::vec::Vec;
use core::f64::consts::PI;

use super::{Norm, Vec2};
use crate::{fmath, Error, Result};

/// Relative tolerance for validating user-supplied polygons.
const INPUT_TOL: f64 = 1e-12;

/// Combinatorial type of a [`ConvexPolygon`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolygonKind {
    Empty,
    Point,
    Segment,
    Polygon,
}

/// A convex polygon stored as a counterclockwise vertex chain, possibly
/// degenerate: zero vertices (empty), one (a point) or two (a segment).
///
/// Chains of three or more vertices have no repeated consecutive vertices
/// and no collinear interior vertices.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct ConvexPolygon {
    vertices: Vec<Vec2>,
}

impl ConvexPolygon {
    /// Validates a vertex chain. Either orientation is accepted, collinear and
    /// repeated vertices are dropped, and a nonconvex or self-intersecting
    /// chain is rejected with [`Error::NonConvex`].
    pub fn new(mut vertices: Vec<Vec2>) -> Result<Self> {
        if vertices.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidPolygon("non-finite vertex"));
        }
        let eps = INPUT_TOL * bbox_diagonal(&vertices).max(f64::MIN_POSITIVE);
        let mut deduped: Vec<Vec2> = Vec::with_capacity(vertices.len());
        for v in vertices.drain(..) {
            if deduped.last().map_or(true, |l| l.distance(v) > eps) {
                deduped.push(v);
            }
        }
        while deduped.len() > 1 && deduped[0].distance(*deduped.last().unwrap()) <= eps {
            deduped.pop();
        }
        match deduped.len() {
            0 => return Ok(Self::empty()),
            1 => return Ok(Self::point(deduped[0])),
            2 => return Ok(Self::segment(deduped[0], deduped[1])),
            _ => {}
        }
        let signed = signed_area(&deduped);
        if signed.abs() <= eps * bbox_diagonal(&deduped) {
            // Zero area: acceptable only if every vertex lies on one line.
            let (a, b) = farthest_pair(&deduped);
            let dir = (b - a).normalized();
            if deduped.iter().all(|p| (*p - a).cross(dir).abs() <= eps) {
                return Ok(Self::segment(a, b));
            }
            return Err(Error::NonConvex);
        }
        if signed < 0.0 {
            deduped.reverse();
        }
        let n = deduped.len();
        let mut turning = 0.0;
        for i in 0..n {
            let e0 = deduped[(i + 1) % n] - deduped[i];
            let e1 = deduped[(i + 2) % n] - deduped[(i + 1) % n];
            let cross = e0.cross(e1);
            if cross < -eps * (e0.norm() + e1.norm()) {
                return Err(Error::NonConvex);
            }
            turning += fmath::atan2(cross, e0.dot(e1));
        }
        if (turning - 2.0 * PI).abs() > 1e-6 {
            return Err(Error::NonConvex);
        }
        Ok(Self::from_ccw(deduped, eps))
    }

    pub fn empty() -> Self {
        Self { vertices: Vec::new() }
    }

    pub fn point(p: Vec2) -> Self {
        Self {
            vertices: alloc::vec![p],
        }
    }

    pub fn segment(a: Vec2, b: Vec2) -> Self {
        if a == b {
            return Self::point(a);
        }
        Self {
            vertices: alloc::vec![a, b],
        }
    }

    /// Axis-aligned rectangle `[0, w] × [0, h]`.
    pub fn rectangle(w: f64, h: f64) -> Result<Self> {
        if !(w > 0.0 && h > 0.0 && w.is_finite() && h.is_finite()) {
            return Err(Error::InvalidPolygon("rectangle sides must be positive"));
        }
        Ok(Self {
            vertices: alloc::vec![
                Vec2::new(0.0, 0.0),
                Vec2::new(w, 0.0),
                Vec2::new(w, h),
                Vec2::new(0.0, h)
            ],
        })
    }

    pub fn unit_square() -> Self {
        Self::rectangle(1.0, 1.0).expect("unit square")
    }

    /// Regular `k`-gon with unit circumradius, centered at the origin, with
    /// a vertex on the positive x-axis.
    pub fn regular(k: usize) -> Result<Self> {
        if k < 3 {
            return Err(Error::InvalidPolygon("regular polygon needs at least 3 vertices"));
        }
        let vs = (0..k)
            .map(|i| Vec2::from_angle(2.0 * PI * i as f64 / k as f64))
            .collect();
        Ok(Self { vertices: vs })
    }

    /// Builds a polygon from a counterclockwise chain known to be convex up
    /// to rounding, removing duplicates and collinear vertices within `eps`.
    pub(crate) fn from_ccw(mut vs: Vec<Vec2>, eps: f64) -> Self {
        loop {
            let before = vs.len();
            dedup_cyclic(&mut vs, eps);
            if vs.len() <= 2 {
                break;
            }
            let n = vs.len();
            let mut removed = false;
            for i in 0..n {
                let prev = vs[(i + n - 1) % n];
                let next = vs[(i + 1) % n];
                let p = vs[i];
                let base = next - prev;
                let len2 = base.dot(base);
                let t = (p - prev).dot(base);
                if t >= 0.0 && t <= len2 && base.normalized().cross(p - prev).abs() <= eps {
                    vs.remove(i);
                    removed = true;
                    break;
                }
            }
            if !removed && vs.len() == before {
                break;
            }
        }
        if vs.len() == 2 && vs[0].distance(vs[1]) <= eps {
            vs.truncate(1);
        }
        Self { vertices: vs }
    }

    pub fn vertices(&self) -> &[Vec2] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn kind(&self) -> PolygonKind {
        match self.vertices.len() {
            0 => PolygonKind::Empty,
            1 => PolygonKind::Point,
            2 => PolygonKind::Segment,
            _ => PolygonKind::Polygon,
        }
    }

    pub fn is_degenerate(&self) -> bool {
        self.vertices.len() <= 2
    }

    /// Shoelace area; zero for degenerate chains.
    pub fn area(&self) -> f64 {
        if self.vertices.len() < 3 {
            return 0.0;
        }
        signed_area(&self.vertices)
    }

    /// Anisotropic perimeter `Σ |e| φ*(ν_e)`. A segment counts both sides and a
    /// point has none.
    pub fn perimeter_phi(&self, norm: &Norm) -> f64 {
        let n = self.vertices.len();
        if n < 2 {
            return 0.0;
        }
        // |e| φ*(ν_e) = φ*(|e| ν_e) and |e| ν_e is the edge vector rotated by -90°.
        (0..n)
            .map(|i| norm.support((self.vertices[(i + 1) % n] - self.vertices[i]).perp_cw()))
            .sum()
    }

    /// Euclidean diameter.
    pub fn diameter(&self) -> f64 {
        if self.vertices.len() < 2 {
            return 0.0;
        }
        let (a, b) = farthest_pair(&self.vertices);
        a.distance(b)
    }

    /// Area centroid for proper polygons, midpoint for segments.
    pub fn center(&self) -> Option<Vec2> {
        match self.vertices.len() {
            0 => None,
            1 => Some(self.vertices[0]),
            2 => Some(self.vertices[0].lerp(self.vertices[1], 0.5)),
            n => {
                let origin = self.vertices[0];
                let mut acc = Vec2::ZERO;
                let mut area2 = 0.0;
                for i in 1..n - 1 {
                    let a = self.vertices[i] - origin;
                    let b = self.vertices[i + 1] - origin;
                    let w = a.cross(b);
                    acc += (a + b) * w;
                    area2 += w;
                }
                Some(origin + acc * (1.0 / (3.0 * area2)))
            }
        }
    }

    pub fn translated(&self, d: Vec2) -> Self {
        Self {
            vertices: self.vertices.iter().map(|v| *v + d).collect(),
        }
    }

    /// Homothety about the origin; `s` must be positive.
    pub fn scaled(&self, s: f64) -> Self {
        Self {
            vertices: self.vertices.iter().map(|v| *v * s).collect(),
        }
    }

    /// Outward unit normals and lengths of the edges of a proper polygon.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        let n = self.vertices.len();
        let count = if n >= 3 { n } else { 0 };
        (0..count).map(move |i| {
            let a = self.vertices[i];
            let b = self.vertices[(i + 1) % n];
            let e = b - a;
            let length = e.norm();
            let normal = e.perp_cw() * (1.0 / length);
            Edge {
                start: a,
                end: b,
                normal,
                offset: normal.dot(a),
                length,
            }
        })
    }

    /// Support function `max_{v ∈ C} v · u`.
    pub fn support(&self, u: Vec2) -> f64 {
        self.vertices
            .iter()
            .map(|v| v.dot(u))
            .fold(f64::NEG_INFINITY, f64::max)
    }

    /// Intersection with the half-plane `{x : normal · x ≤ offset}`. Vertices
    /// within `eps` of the boundary line count as inside.
    pub fn clip(&self, normal: Vec2, offset: f64, eps: f64) -> Self {
        let mut out = Vec::with_capacity(self.vertices.len() + 1);
        clip_into(&self.vertices, normal, offset, eps, &mut out);
        Self { vertices: out }
    }

    /// Inner parallel body `C ⊖ s W_φ`, computed by intersecting the edge
    /// half-planes pushed inward by `s φ*(ν_e)`.
    ///
    /// Degenerate chains have empty interior, so any positive erosion empties
    /// them. The result is cleaned with tolerance `eps` and may itself be a
    /// segment or a point.
    pub fn erode(&self, norm: &Norm, s: f64, eps: f64) -> Self {
        if s <= 0.0 || self.is_empty() {
            return self.clone();
        }
        if self.is_degenerate() {
            return Self::empty();
        }
        let mut cur = self.vertices.clone();
        let mut next = Vec::with_capacity(cur.len() + 1);
        for e in self.edges() {
            let offset = e.offset - s * norm.support(e.normal);
            clip_into(&cur, e.normal, offset, eps, &mut next);
            core::mem::swap(&mut cur, &mut next);
            if cur.is_empty() {
                return Self::empty();
            }
        }
        Self::from_ccw(cur, eps)
    }

    /// Minimum width over edge directions (zero for degenerate chains).
    pub fn width(&self) -> f64 {
        self.edges()
            .map(|e| {
                self.vertices
                    .iter()
                    .map(|v| e.offset - e.normal.dot(*v))
                    .fold(0.0, f64::max)
            })
            .fold(f64::INFINITY, f64::min)
            .min(if self.is_degenerate() { 0.0 } else { f64::INFINITY })
    }

    /// Replaces a sliver thinner than `eps` by its longest chord (or a point).
    pub fn collapse(&self, eps: f64) -> Self {
        if self.kind() != PolygonKind::Polygon || self.width() > eps {
            return self.clone();
        }
        let (a, b) = farthest_pair(&self.vertices);
        if a.distance(b) <= eps {
            return Self::point(self.center().unwrap_or(a));
        }
        Self::segment(a, b)
    }

    pub fn contains_point(&self, p: Vec2, eps: f64) -> bool {
        match self.vertices.len() {
            0 => false,
            1 => self.vertices[0].distance(p) <= eps,
            2 => point_segment_distance(p, self.vertices[0], self.vertices[1]) <= eps,
            _ => self.edges().all(|e| e.normal.dot(p) <= e.offset + eps),
        }
    }

    /// Smallest `δ ≥ 0` with `p ∈ C ⊕ δ W_φ`.
    pub fn gauge_distance(&self, p: Vec2, norm: &Norm) -> f64 {
        if self.is_empty() {
            return f64::INFINITY;
        }
        match norm {
            Norm::Euclidean => self.euclidean_distance(p),
            Norm::Polygon(w) => {
                // C ⊕ δW is cut out by support inequalities in the normals of C
                // and of W; the binding one gives the distance.
                let mut worst = 0.0f64;
                let mut check = |u: Vec2| {
                    let hw = norm.support(u);
                    worst = worst.max((p.dot(u) - self.support(u)) / hw);
                };
                for f in w.facets() {
                    check(f.normal);
                }
                match self.vertices.len() {
                    1 => {}
                    2 => {
                        let nu = (self.vertices[1] - self.vertices[0]).perp_cw().normalized();
                        check(nu);
                        check(-nu);
                    }
                    _ => {
                        for e in self.edges() {
                            check(e.normal);
                        }
                    }
                }
                worst
            }
        }
    }

    /// Euclidean distance from `p` to the polygon (zero inside).
    pub fn euclidean_distance(&self, p: Vec2) -> f64 {
        match self.vertices.len() {
            0 => f64::INFINITY,
            1 => self.vertices[0].distance(p),
            2 => point_segment_distance(p, self.vertices[0], self.vertices[1]),
            n => {
                if self.edges().all(|e| e.normal.dot(p) <= e.offset) {
                    return 0.0;
                }
                (0..n)
                    .map(|i| point_segment_distance(p, self.vertices[i], self.vertices[(i + 1) % n]))
                    .fold(f64::INFINITY, f64::min)
            }
        }
    }

    /// Largest distance from a vertex of `self` to the nearest vertex of
    /// `other` after aligning the cyclic start; `None` when the vertex
    /// counts differ.
    pub fn vertex_distance(&self, other: &ConvexPolygon) -> Option<f64> {
        let n = self.vertices.len();
        if n != other.vertices.len() {
            return None;
        }
        if n == 0 {
            return Some(0.0);
        }
        (0..n)
            .map(|shift| {
                (0..n)
                    .map(|i| self.vertices[i].distance(other.vertices[(i + shift) % n]))
                    .fold(0.0, f64::max)
            })
            .reduce(f64::min)
    }
}

/// One edge of a proper convex polygon.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Edge {
    pub start: Vec2,
    pub end: Vec2,
    pub normal: Vec2,
    pub offset: f64,
    pub length: f64,
}

fn clip_into(src: &[Vec2], normal: Vec2, offset: f64, eps: f64, out: &mut Vec<Vec2>) {
    out.clear();
    let n = src.len();
    if n == 0 {
        return;
    }
    if n == 1 {
        if normal.dot(src[0]) - offset <= eps {
            out.push(src[0]);
        }
        return;
    }
    for i in 0..n {
        let p = src[i];
        let q = src[(i + 1) % n];
        let dp = normal.dot(p) - offset;
        let dq = normal.dot(q) - offset;
        if dp <= eps {
            out.push(p);
        }
        if (dp < -eps && dq > eps) || (dp > eps && dq < -eps) {
            out.push(p + (q - p) * (dp / (dp - dq)));
        }
    }
}

fn dedup_cyclic(vs: &mut Vec<Vec2>, eps: f64) {
    vs.dedup_by(|b, a| a.distance(*b) <= eps);
    while vs.len() > 1 && vs[0].distance(*vs.last().unwrap()) <= eps {
        vs.pop();
    }
}

fn signed_area(vs: &[Vec2]) -> f64 {
    let n = vs.len();
    let origin = vs[0];
    (1..n - 1)
        .map(|i| (vs[i] - origin).cross(vs[i + 1] - origin))
        .sum::<f64>()
        * 0.5
}

fn bbox_diagonal(vs: &[Vec2]) -> f64 {
    if vs.is_empty() {
        return 0.0;
    }
    let (mut lo, mut hi) = (vs[0], vs[0]);
    for v in vs {
        lo = Vec2::new(lo.x.min(v.x), lo.y.min(v.y));
        hi = Vec2::new(hi.x.max(v.x), hi.y.max(v.y));
    }
    lo.distance(hi)
}

fn farthest_pair(vs: &[Vec2]) -> (Vec2, Vec2) {
    let mut best = (vs[0], vs[0]);
    let mut best_d = -1.0;
    for (i, a) in vs.iter().enumerate() {
        for b in &vs[i + 1..] {
            let d = a.distance(*b);
            if d > best_d {
                best_d = d;
                best = (*a, *b);
            }
        }
    }
    best
}

pub(crate) fn point_segment_distance(p: Vec2, a: Vec2, b: Vec2) -> f64 {
    let ab = b - a;
    let len2 = ab.dot(ab);
    if len2 == 0.0 {
        return p.distance(a);
    }
    let t = ((p - a).dot(ab) / len2).clamp(0.0, 1.0);
    p.distance(a + ab * t)
}
