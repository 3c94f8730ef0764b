mod common;

use common::*;
use proptest::prelude::*;
use rand::Rng;
use wulff_towers_core::geometry::{erode, isoperimetric_deficit, max_inscribed_radius, plaquette};
use wulff_towers_core::isoperimetric::solve_isoperimetric;
use wulff_towers_core::oracle::{discretized_measure, Oracle};
use wulff_towers_core::{Domain, Norm, RoundedRegion, TowerCase, TowerSolver, Vec2};

fn pick_norm(seed: u64, which: u8) -> Norm {
    norms(&mut rng(seed ^ 0x5eed))[which as usize % 3].1.clone()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn steiner_matches_discretization(seed in any::<u64>(), which in 0u8..3) {
        let region = random_region(&mut rng(seed));
        let norm = pick_norm(seed, which);
        let (a, p) = discretized_measure(&region, &norm, 4096).unwrap();
        prop_assert!(rel_diff(a, region.area(&norm)) < 1e-4);
        prop_assert!(rel_diff(p, region.perimeter_phi(&norm)) < 1e-3);
    }

    #[test]
    fn erosion_is_monotone_and_nested(seed in any::<u64>(), which in 0u8..3, s in 0.0f64..1.0, t in 0.0f64..1.0) {
        let region = random_region(&mut rng(seed));
        let norm = pick_norm(seed, which);
        let (big_r, _) = max_inscribed_radius(&region, &norm).unwrap();
        let (a, b) = (s.min(t) * big_r, s.max(t) * big_r);
        let ea = erode(&region, &norm, a).unwrap();
        let eb = erode(&region, &norm, b).unwrap();
        prop_assert!(ea.area(&norm) >= eb.area(&norm) - 1e-12);
        prop_assert!(ea.contains(&eb, &norm, 1e-9));
        prop_assert!(region.contains(&ea, &norm, 1e-9));
    }

    #[test]
    fn plaquette_lies_between_erosion_and_region(seed in any::<u64>(), which in 0u8..3, s in 0.0f64..1.0) {
        let region = random_region(&mut rng(seed));
        let norm = pick_norm(seed, which);
        let (big_r, _) = max_inscribed_radius(&region, &norm).unwrap();
        let r = s * big_r;
        let pl = plaquette(&region, &norm, r).unwrap();
        prop_assert!(region.contains(&pl, &norm, 1e-9));
        prop_assert!(pl.area(&norm) <= region.area(&norm) * (1.0 + 1e-12));
        prop_assert!(pl.area(&norm) >= erode(&region, &norm, r).unwrap().area(&norm));
    }

    #[test]
    fn measures_scale(seed in any::<u64>(), which in 0u8..3, lambda in 0.2f64..5.0) {
        let region = random_region(&mut rng(seed));
        let norm = pick_norm(seed, which);
        let scaled = region.scaled(lambda);
        prop_assert!(rel_diff(scaled.area(&norm), lambda * lambda * region.area(&norm)) < 1e-12);
        prop_assert!(rel_diff(scaled.perimeter_phi(&norm), lambda * region.perimeter_phi(&norm)) < 1e-12);
        let (r0, _) = max_inscribed_radius(&region, &norm).unwrap();
        let (r1, _) = max_inscribed_radius(&scaled, &norm).unwrap();
        prop_assert!(rel_diff(r1, lambda * r0) < 1e-9);
    }

    #[test]
    fn deficit_is_nonnegative(seed in any::<u64>(), which in 0u8..3, rho in 0.01f64..3.0) {
        let region = random_region(&mut rng(seed));
        let norm = pick_norm(seed, which);
        prop_assert!(isoperimetric_deficit(&region, &norm) >= -1e-9);
        let ball = RoundedRegion::wulff_ball(Vec2::new(0.3, -0.2), rho);
        prop_assert!(isoperimetric_deficit(&ball, &norm).abs() <= 1e-9);
    }

    #[test]
    fn isoperimetric_solution_has_requested_area(seed in any::<u64>(), which in 0u8..3, f in 0.001f64..1.0) {
        let region = random_region(&mut rng(seed));
        let norm = pick_norm(seed, which);
        let m = f * region.area(&norm);
        let sol = solve_isoperimetric(&region, &norm, m).unwrap();
        prop_assert!(rel_diff(sol.shape.area(&norm), m) < 1e-10);
        prop_assert!(region.contains(&sol.shape, &norm, 1e-9 * region.diameter(&norm)));
        let w = norm.wulff_area();
        prop_assert!(sol.perimeter >= 2.0 * (m * w).sqrt() * (1.0 - 1e-12));
    }

    #[test]
    fn tower_mass_and_nesting(seed in any::<u64>(), which in 0u8..3, f in 0.01f64..25.0) {
        let region = random_region(&mut rng(seed));
        let norm = pick_norm(seed, which);
        let domain = Domain::new(region, norm.clone()).unwrap();
        let m = f * domain.area();
        let p = TowerSolver::from_domain(domain.clone()).solve(m).unwrap();
        prop_assert!(rel_diff(p.mass, m) < 1e-10);
        let sum: f64 = p.layers.iter().map(|l| l.perimeter).sum();
        prop_assert!((sum - p.energy).abs() < 1e-12 * p.energy.max(1.0));
        let eps = 1e-9 * domain.region().diameter(&norm);
        for w in p.layers.windows(2) {
            prop_assert!(w[0].region.contains(&w[1].region, &norm, eps));
        }
        if p.case == Some(TowerCase::A) {
            prop_assert_eq!(p.distinct_shapes(eps), 1);
        }
    }

    #[test]
    fn tower_energy_scales(seed in any::<u64>(), which in 0u8..3, f in 0.05f64..10.0, lambda in 0.3f64..3.0) {
        let region = random_region(&mut rng(seed));
        let norm = pick_norm(seed, which);
        let m = f * region.area(&norm);
        let p = TowerSolver::new(region.clone(), norm.clone()).unwrap().solve(m).unwrap();
        let q = TowerSolver::new(region.scaled(lambda), norm).unwrap().solve(lambda * lambda * m).unwrap();
        prop_assert!(rel_diff(q.energy, lambda * p.energy) < 1e-8);
    }

    #[test]
    fn tower_energy_is_monotone_in_mass(seed in any::<u64>(), which in 0u8..3) {
        let mut r = rng(seed);
        let region = random_region(&mut r);
        let norm = pick_norm(seed, which);
        let area = region.area(&norm);
        let mut masses: Vec<f64> = (0..12).map(|_| r.gen_range(0.0..8.0) * area).collect();
        masses.sort_by(f64::total_cmp);
        let curve = TowerSolver::new(region, norm).unwrap().energy_curve(&masses).unwrap();
        for w in curve.windows(2) {
            prop_assert!(w[1].energy >= w[0].energy - 1e-9 * w[0].energy.max(1.0));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn oracle_never_beats_solver(seed in any::<u64>(), which in 0u8..3, f in 0.05f64..20.0) {
        let region = random_region(&mut rng(seed));
        let norm = pick_norm(seed, which);
        let domain = Domain::new(region, norm).unwrap();
        let m = f * domain.area();
        let (_, rep) = Oracle::from_domain(domain, 2000).unwrap().verify(m).unwrap();
        prop_assert!(rep.discrepancy.unwrap() >= -1e-6);
    }
}
