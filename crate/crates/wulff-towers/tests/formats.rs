use std::f64::consts::PI;

use wulff_towers::input::{parse_domain, parse_masses, parse_norm, DomainFile};
use wulff_towers::report::Report;
use wulff_towers::svg;
use wulff_towers_core::{ConvexPolygon, Norm, RoundedRegion, TowerProfile, TowerSolver, Vec2};

fn hexagon() -> Norm {
    Norm::polygon(vec![
        Vec2::new(1.0, 0.0),
        Vec2::new(0.4, 0.8),
        Vec2::new(-0.6, 0.7),
        Vec2::new(-1.0, 0.0),
        Vec2::new(-0.4, -0.8),
        Vec2::new(0.6, -0.7),
    ])
    .unwrap()
}

/// One spec per family, across norms.
fn specs() -> Vec<(RoundedRegion, Norm, f64)> {
    let square = RoundedRegion::polygon(ConvexPolygon::unit_square());
    let rect = RoundedRegion::polygon(ConvexPolygon::rectangle(2.0, 1.0).unwrap());
    let rounded = RoundedRegion::new(ConvexPolygon::unit_square(), 0.3).unwrap();
    let rounded_area = rounded.area(&Norm::Euclidean);
    vec![
        (square.clone(), Norm::Euclidean, 0.5),
        (square.clone(), Norm::Euclidean, 2.5),
        (square.clone(), Norm::l1(), 1.0),
        (square.clone(), hexagon(), 3.7),
        (rect, Norm::Euclidean, 3.0),
        (rounded.clone(), Norm::Euclidean, rounded_area + 0.2),
        (rounded, Norm::l1(), 4.0),
        (parse_domain("regular:6").unwrap(), hexagon(), 0.0),
    ]
}

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= 1e-12 * a.abs().max(b.abs()).max(1.0)
}

fn same_polygon(a: &ConvexPolygon, b: &ConvexPolygon) -> bool {
    a.len() == b.len()
        && a.vertices()
            .iter()
            .zip(b.vertices())
            .all(|(p, q)| close(p.x, q.x) && close(p.y, q.y))
}

fn assert_same(a: &TowerProfile, b: &TowerProfile) {
    assert_eq!((a.j_max, a.case), (b.j_max, b.case));
    assert!(close(a.energy, b.energy) && close(a.mass, b.mass));
    assert_eq!(a.r_bar.is_some(), b.r_bar.is_some());
    if let (Some(x), Some(y)) = (a.r_bar, b.r_bar) {
        assert!(close(x, y));
    }
    assert_eq!(a.ties.len(), b.ties.len());
    for (s, t) in a.ties.iter().zip(&b.ties) {
        assert_eq!((s.case, s.j_max), (t.case, t.j_max));
        assert!(close(s.r_bar, t.r_bar) && close(s.energy, t.energy));
    }
    assert_eq!(a.layers.len(), b.layers.len());
    for (s, t) in a.layers.iter().zip(&b.layers) {
        assert_eq!((s.kind, s.unique), (t.kind, t.unique));
        assert!(close(s.region.rho, t.region.rho) && close(s.radius, t.radius));
        assert!(close(s.area, t.area) && close(s.perimeter, t.perimeter));
        assert!(same_polygon(&s.region.core, &t.region.core));
        assert!(same_polygon(&s.center_freedom, &t.center_freedom));
    }
}

#[test]
fn report_round_trip() {
    for (region, norm, m) in specs() {
        let p = TowerSolver::new(region, norm).unwrap().solve(m).unwrap();
        let json = Report::from_profile(&p).to_json();
        let back = Report::from_json(&json).unwrap().to_profile().unwrap();
        assert_same(&p, &back);
    }
}

#[test]
fn report_covers_every_family() {
    let mut seen: Vec<_> = specs()
        .into_iter()
        .filter_map(|(region, norm, m)| TowerSolver::new(region, norm).unwrap().solve(m).unwrap().case)
        .collect();
    seen.sort();
    seen.dedup();
    assert_eq!(seen.len(), 4, "{seen:?}");
}

#[test]
fn cli_report_matches_in_process_solve() {
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_wulff-towers"))
        .args(["solve", "--domain", "rectangle:2:1", "--norm", "l1", "--mass", "2.2"])
        .env_remove("WULFF_TOWERS_TOL")
        .output()
        .unwrap();
    let parsed = Report::from_json(&String::from_utf8(out.stdout).unwrap())
        .unwrap()
        .to_profile()
        .unwrap();
    let direct = TowerSolver::new(parse_domain("rectangle:2:1").unwrap(), Norm::l1())
        .unwrap()
        .solve(2.2)
        .unwrap();
    assert_same(&direct, &parsed);
}

/// Points along an SVG path made of `M`, `L`, `A` (small, counterclockwise)
/// and `Z` commands, with arcs sampled finely.
fn sample_path(d: &str) -> Vec<Vec2> {
    let mut pts: Vec<Vec2> = Vec::new();
    let mut chunks: Vec<(char, Vec<f64>)> = Vec::new();
    for c in d.chars() {
        if c.is_ascii_uppercase() {
            chunks.push((c, Vec::new()));
        }
    }
    let bodies: Vec<&str> = d.split(|c: char| c.is_ascii_uppercase()).skip(1).collect();
    for ((_, nums), body) in chunks.iter_mut().zip(bodies) {
        *nums = body.split_whitespace().map(|t| t.parse().unwrap()).collect();
    }
    for (cmd, n) in chunks {
        match cmd {
            'M' | 'L' => pts.push(Vec2::new(n[0], n[1])),
            'A' => {
                let (r, p0, p1) = (n[0], *pts.last().unwrap(), Vec2::new(n[5], n[6]));
                let chord = p1 - p0;
                let h = (r * r - chord.dot(chord) / 4.0).max(0.0).sqrt();
                let center = p0.lerp(p1, 0.5) + chord.perp_ccw().normalized() * h;
                let (a0, mut a1) = ((p0 - center).angle(), (p1 - center).angle());
                while a1 < a0 {
                    a1 += 2.0 * PI;
                }
                for k in 1..=256 {
                    pts.push(center + Vec2::from_angle(a0 + (a1 - a0) * k as f64 / 256.0) * r);
                }
            }
            'Z' => {}
            other => panic!("unexpected command {other}"),
        }
    }
    pts
}

fn inside(p: Vec2, poly: &[Vec2], tol: f64) -> bool {
    let n = poly.len();
    (0..n).all(|i| {
        let (a, b) = (poly[i], poly[(i + 1) % n]);
        let e = b - a;
        if e.norm() == 0.0 {
            return true;
        }
        e.cross(p - a) / e.norm() >= -tol
    })
}

fn layer_paths(doc: &str) -> Vec<String> {
    doc.lines()
        .filter(|l| l.contains("class=\"layer\""))
        .map(|l| {
            let start = l.find(" d=\"").unwrap() + 4;
            let end = start + l[start..].find('"').unwrap();
            l[start..end].to_string()
        })
        .collect()
}

#[test]
fn svg_layers_are_nested() {
    for (region, norm, m) in specs() {
        let p = TowerSolver::new(region.clone(), norm.clone()).unwrap().solve(m).unwrap();
        let doc = svg::render(&region, &norm, &p);
        assert!(doc.contains("version=\"1.1\"") && doc.contains("class=\"legend\""));
        let paths = layer_paths(&doc);
        assert_eq!(paths.len(), p.j_max);
        for (d, layer) in paths.iter().zip(&p.layers) {
            let curved = !norm.is_polygonal() && layer.region.rho > 0.0;
            assert_eq!(d.contains('A'), curved);
        }
        let shapes: Vec<Vec<Vec2>> = paths.iter().map(|d| sample_path(d)).collect();
        let Some(innermost) = shapes.last() else { continue };
        let tol = 1e-5 * region.diameter(&norm);
        for outer in &shapes {
            assert!(innermost.iter().all(|&q| inside(q, outer, tol)));
        }
    }
}

#[test]
fn masses_and_builtins() {
    assert_eq!(parse_masses("0.1:5:0.1").unwrap().len(), 50);
    assert_eq!(parse_masses("1:1:0.5").unwrap(), vec![1.0]);
    assert_eq!(parse_masses("2.5").unwrap(), vec![2.5]);
    assert!(parse_masses("1:0:0.1").is_err());
    assert!(parse_masses("nan").is_err());
    let hex = parse_domain("regular:6").unwrap();
    assert!((hex.area(&Norm::Euclidean) - 1.5 * 3f64.sqrt()).abs() < 1e-12);
    assert!(parse_domain("regular:2").is_err());
    assert!(parse_norm("l1").unwrap().is_polygonal());
    let file: DomainFile = serde_json::from_str(r#"{"type":"rounded","core":[[0,0],[1,0]],"radius":0.5}"#).unwrap();
    assert!((file.to_region().unwrap().area(&Norm::Euclidean) - (1.0 + PI / 4.0)).abs() < 1e-12);
}
