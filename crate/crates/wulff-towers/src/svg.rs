//! SVG 1.1 rendering of a tower: the domain outline, then each layer from
//! the bottom up with a translucent fill, so overlapping layers read darker.

use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt::Write;

use wulff_towers_core::oracle::boundary_polygon;
use wulff_towers_core::{Norm, RoundedRegion, TowerProfile, Vec2};

/// Chords per rounded corner when a boundary is sampled; only the bounding
/// box of Euclidean outlines uses it, since polygonal norms give exact
/// polygons and Euclidean layers are drawn with arcs.
pub const POLYGON_CORNER_SEGMENTS: usize = 64;

const FILL: &str = "#2b6cb0";
const FILL_OPACITY: f64 = 0.22;

/// SVG path data for the boundary of `region`, in model coordinates.
pub fn region_path(region: &RoundedRegion, norm: &Norm) -> String {
    let core = region.core.vertices();
    let rho = region.rho;
    let mut d = String::new();
    if core.is_empty() {
        return d;
    }
    if rho <= 0.0 || norm.is_polygonal() {
        let pts = if rho <= 0.0 {
            core.to_vec()
        } else {
            boundary_polygon(region, norm, POLYGON_CORNER_SEGMENTS)
        };
        for (i, p) in pts.iter().enumerate() {
            let _ = write!(d, "{}{} {} ", if i == 0 { "M" } else { "L" }, p.x, p.y);
        }
        d.push('Z');
        return d;
    }
    if let [c] = core {
        let start = *c + Vec2::new(rho, 0.0);
        let _ = write!(d, "M{} {} ", start.x, start.y);
        arc(&mut d, *c, rho, 0.0, 2.0 * PI);
        d.push('Z');
        return d;
    }
    let n = core.len();
    for i in 0..n {
        let (prev, cur, next) = (core[(i + n - 1) % n], core[i], core[(i + 1) % n]);
        let a0 = (cur - prev).perp_cw().angle();
        let mut sweep = (next - cur).perp_cw().angle() - a0;
        while sweep < 0.0 {
            sweep += 2.0 * PI;
        }
        if n == 2 && sweep < 1e-15 {
            sweep = PI;
        }
        let start = cur + Vec2::from_angle(a0) * rho;
        let _ = write!(d, "{}{} {} ", if i == 0 { "M" } else { "L" }, start.x, start.y);
        arc(&mut d, cur, rho, a0, sweep);
    }
    d.push('Z');
    d
}

/// Counterclockwise arc in pieces of at most a quarter turn.
fn arc(d: &mut String, center: Vec2, rho: f64, a0: f64, sweep: f64) {
    let pieces = (sweep / FRAC_PI_2).ceil().max(1.0) as usize;
    for k in 1..=pieces {
        let p = center + Vec2::from_angle(a0 + sweep * k as f64 / pieces as f64) * rho;
        let _ = write!(d, "A{rho} {rho} 0 0 1 {} {} ", p.x, p.y);
    }
}

/// Whole document for `profile` over `domain`.
pub fn render(domain: &RoundedRegion, norm: &Norm, profile: &TowerProfile) -> String {
    let outline = boundary_polygon(domain, norm, POLYGON_CORNER_SEGMENTS);
    let (mut lo, mut hi) = (Vec2::new(f64::MAX, f64::MAX), Vec2::new(f64::MIN, f64::MIN));
    for p in &outline {
        lo = Vec2::new(lo.x.min(p.x), lo.y.min(p.y));
        hi = Vec2::new(hi.x.max(p.x), hi.y.max(p.y));
    }
    let size = (hi - lo).x.max((hi - lo).y).max(1e-9);
    let pad = 0.05 * size;
    let legend_h = 0.12 * size;
    let (vx, vy) = (lo.x - pad, -hi.y - pad);
    let (vw, vh) = (hi.x - lo.x + 2.0 * pad, hi.y - lo.y + 2.0 * pad + legend_h);
    let stroke = 0.004 * size;

    let mut s = String::new();
    s.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"{vx} {vy} {vw} {vh}\" width=\"640\" height=\"{}\">",
        (640.0 * vh / vw).round()
    );
    s.push_str("<g transform=\"scale(1,-1)\">\n");
    let _ = writeln!(
        s,
        "<path class=\"domain\" d=\"{}\" fill=\"none\" stroke=\"#000\" stroke-width=\"{stroke}\"/>",
        region_path(domain, norm)
    );
    for (j, layer) in profile.layers.iter().enumerate() {
        let _ = writeln!(
            s,
            "<path class=\"layer\" data-layer=\"{}\" data-kind=\"{}\" d=\"{}\" fill=\"{FILL}\" fill-opacity=\"{FILL_OPACITY}\" stroke=\"{FILL}\" stroke-width=\"{}\"/>",
            j + 1,
            layer.kind.label(),
            region_path(&layer.region, norm),
            0.5 * stroke
        );
    }
    s.push_str("</g>\n");
    let legend = match (profile.case, profile.r_bar) {
        (Some(c), Some(r)) => format!(
            "ĵ = {}, r̄ = {:.6}, case {}, energy {:.6}",
            profile.j_max,
            r,
            c.label(),
            profile.energy
        ),
        _ => "ĵ = 0 (empty)".to_string(),
    };
    let _ = writeln!(
        s,
        "<text class=\"legend\" x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"{}\">{legend}</text>",
        lo.x,
        -lo.y + pad + 0.6 * legend_h,
        0.05 * size
    );
    s.push_str("</svg>\n");
    s
}
