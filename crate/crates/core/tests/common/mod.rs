#![allow(dead_code)]

use std::f64::consts::PI;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use wulff_towers_core::{ConvexPolygon, Norm, RoundedRegion, Vec2};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Convex polygon with `3..=8` vertices and diameter in `[0.5, 3]`: points on
/// a circle at random angles, then stretched, rotated and shifted.
pub fn random_polygon(rng: &mut impl Rng) -> ConvexPolygon {
    loop {
        let k = rng.gen_range(3..=8);
        let mut angles: Vec<f64> = (0..k).map(|_| rng.gen_range(0.0..2.0 * PI)).collect();
        angles.sort_by(f64::total_cmp);
        let gaps_ok = (0..k).all(|i| {
            let next = if i + 1 < k { angles[i + 1] } else { angles[0] + 2.0 * PI };
            next - angles[i] > 0.15
        });
        if !gaps_ok {
            continue;
        }
        let stretch = rng.gen_range(0.3..1.0);
        let rot = rng.gen_range(0.0..PI);
        let (s, c) = rot.sin_cos();
        let pts: Vec<Vec2> = angles
            .iter()
            .map(|&a| {
                let (x, y) = (a.cos(), stretch * a.sin());
                Vec2::new(c * x - s * y, s * x + c * y)
            })
            .collect();
        let Ok(poly) = ConvexPolygon::new(pts) else { continue };
        let target = rng.gen_range(0.5..3.0);
        let shift = Vec2::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        let poly = poly.scaled(target / poly.diameter()).translated(shift);
        if poly.len() == k {
            return poly;
        }
    }
}

/// Centrally symmetric hexagon Wulff shape with vertex radii in `[0.5, 1.5]`.
pub fn random_hexagon_norm(rng: &mut impl Rng) -> Norm {
    loop {
        let mut angles: Vec<f64> = (0..3).map(|_| rng.gen_range(0.0..PI)).collect();
        angles.sort_by(f64::total_cmp);
        let half: Vec<Vec2> = angles
            .iter()
            .map(|&a| Vec2::from_angle(a) * rng.gen_range(0.5..1.5))
            .collect();
        let mut vs = half.clone();
        vs.extend(half.iter().map(|&v| -v));
        if let Ok(n) = Norm::polygon(vs) {
            return n;
        }
    }
}

pub fn norms(rng: &mut impl Rng) -> [(&'static str, Norm); 3] {
    [
        ("euclidean", Norm::Euclidean),
        ("l1", Norm::l1()),
        ("hexagon", random_hexagon_norm(rng)),
    ]
}

/// Polygon core with a random (possibly zero) rounding radius.
pub fn random_region(rng: &mut impl Rng) -> RoundedRegion {
    let core = random_polygon(rng).scaled(rng.gen_range(0.2..1.0));
    let rho = if rng.gen_bool(0.3) { 0.0 } else { rng.gen_range(0.0..0.5) };
    RoundedRegion::new(core, rho).unwrap()
}

pub fn unit_square() -> RoundedRegion {
    RoundedRegion::polygon(ConvexPolygon::unit_square())
}

pub fn log_spaced(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n)
        .map(|i| (lo.ln() + (hi.ln() - lo.ln()) * (i as f64 + 0.5) / n as f64).exp())
        .collect()
}

pub fn rel_diff(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1e-300)
}
