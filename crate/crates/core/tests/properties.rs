use std::f64::consts::{PI, TAU};

use isogon::{
    angle_at, circumcurve_through, distance, law_of_cosines_angle, polar_point, regular_area,
    sample_convex_polygon, symmetrize, to_canonical, triangle_area, GeometryKind, Point,
    ToleranceConfig,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const CURVED: [GeometryKind; 2] = [GeometryKind::Hyperbolic, GeometryKind::Spherical];

fn cap(g: GeometryKind) -> f64 {
    if g == GeometryKind::Spherical {
        1.5
    } else {
        3.0
    }
}

fn geometry() -> impl Strategy<Value = GeometryKind> {
    prop_oneof![
        Just(GeometryKind::Hyperbolic),
        Just(GeometryKind::Spherical),
        Just(GeometryKind::Euclidean),
    ]
}

fn point_in(g: GeometryKind) -> impl Strategy<Value = Point> {
    (0.0..cap(g), 0.0..TAU).prop_map(move |(r, t)| polar_point(r, t, g).unwrap())
}

fn triple() -> impl Strategy<Value = (Point, Point, Point)> {
    geometry().prop_flat_map(|g| (point_in(g), point_in(g), point_in(g)))
}

#[test]
fn metric_triangle_inequality() {
    for g in GeometryKind::ALL {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..10_000 {
            let [p, q, r] = [0; 3].map(|_| {
                polar_point(rng.random_range(0.0..cap(g)), rng.random_range(0.0..TAU), g).unwrap()
            });
            let d = |a: &Point, b: &Point| distance(a, b).unwrap();
            assert!(d(&p, &r) <= d(&p, &q) + d(&q, &r) + 1e-12);
            assert_eq!(d(&p, &q), d(&q, &p));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn isometries_preserve_distances_and_angles(
        (p, q, r) in triple(),
        t1 in 0.0..TAU,
        t2 in 0.0..TAU,
        r1 in 0.05..1.4f64,
        r2 in 0.05..1.4f64,
    ) {
        let g = p.geometry();
        let u = polar_point(r1, t1, g).unwrap();
        let w = polar_point(r2, t2, g).unwrap();
        prop_assume!(distance(&u, &w).unwrap() > 1e-6);
        let f = to_canonical(&u, &w).unwrap();
        let [fp, fq, fr] = [p, q, r].map(|x| f.apply(&x).unwrap());
        prop_assert!((distance(&fp, &fq).unwrap() - distance(&p, &q).unwrap()).abs() < 1e-10);
        prop_assert!((distance(&fq, &fr).unwrap() - distance(&q, &r).unwrap()).abs() < 1e-10);
        if let (Ok(a), Ok(b)) = (angle_at(&p, &q, &r), angle_at(&fp, &fq, &fr)) {
            prop_assert!((a - b).abs() < 1e-10);
        }
        let back = f.inverse().apply(&fp).unwrap();
        prop_assert!(distance(&back, &p).unwrap() < 1e-10);
    }

    #[test]
    fn angle_matches_law_of_cosines((v, p, q) in triple()) {
        let g = v.geometry();
        let a = distance(&v, &p).unwrap();
        let b = distance(&v, &q).unwrap();
        let c = distance(&p, &q).unwrap();
        let s = 0.5 * (a + b + c);
        prop_assume!((s - a).min(s - b).min(s - c) > 1e-6);
        let direct = angle_at(&v, &p, &q).unwrap();
        let from_sides = law_of_cosines_angle(a, b, c, g).unwrap();
        prop_assert!((direct - from_sides).abs() < 1e-9, "{} vs {}", direct, from_sides);
        prop_assert_eq!(direct, angle_at(&v, &q, &p).unwrap());
    }

    #[test]
    fn circumcurve_kind_ignores_labels(
        a in (0.0..2.5f64, 0.0..TAU),
        b in (0.0..2.5f64, 0.0..TAU),
        c in (0.0..2.5f64, 0.0..TAU),
    ) {
        let g = GeometryKind::Hyperbolic;
        let [p, q, r] = [a, b, c].map(|(r, t)| polar_point(r, t, g).unwrap());
        prop_assume!(distance(&p, &q).unwrap() > 1e-3);
        prop_assume!(distance(&q, &r).unwrap() > 1e-3);
        prop_assume!(distance(&p, &r).unwrap() > 1e-3);
        let kind = circumcurve_through(&p, &q, &r).unwrap().kind;
        for (x, y, z) in [(&q, &r, &p), (&r, &p, &q), (&q, &p, &r), (&p, &r, &q), (&r, &q, &p)] {
            prop_assert_eq!(circumcurve_through(x, y, z).unwrap().kind, kind);
        }
    }
}

#[test]
fn averaging_sides_never_loses_area() {
    for g in CURVED {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        let hi = if g == GeometryKind::Spherical {
            PI
        } else {
            4.0
        };
        let mut done = 0;
        while done < 10_000 {
            let (a, b, c) = (
                rng.random_range(1e-3..hi),
                rng.random_range(1e-3..hi),
                rng.random_range(1e-3..hi),
            );
            let Ok(before) = triangle_area(a, b, c, g) else {
                continue;
            };
            let m = 0.5 * (a + b);
            let after = triangle_area(m, m, c, g).unwrap();
            assert!(before < after || (a - b).abs() < 1e-9);
            let eq = triangle_area(a, a, c, g);
            if let Ok(eq) = eq {
                let m = 0.5 * (a + a);
                assert!((eq - triangle_area(m, m, c, g).unwrap()).abs() < 1e-12);
            }
            done += 1;
        }
    }
}

#[test]
fn triangle_area_euclidean_limit() {
    let (a, b, c) = (0.7, 1.0, 1.2);
    let ratio = |l: f64| {
        triangle_area(l * a, l * b, l * c, GeometryKind::Hyperbolic).unwrap()
            / triangle_area(l * a, l * b, l * c, GeometryKind::Euclidean).unwrap()
    };
    let (small, large) = (ratio(1e-2), ratio(1e-1));
    assert!((1.0 - small).abs() < (1.0 - large).abs());
    assert!(small < 1.0 && large < 1.0);
}

#[test]
fn triangle_area_vanishes_at_degenerate_boundary() {
    for g in CURVED {
        let mut last = f64::INFINITY;
        for k in 1..12 {
            let gap = 10f64.powi(-k);
            let area = triangle_area(0.8, 0.9, 1.7 - gap, g).unwrap();
            assert!(area < last);
            last = area;
        }
        assert!(last < 1e-5);
    }
}

#[test]
fn polygon_measures_are_isometry_invariant() {
    for g in GeometryKind::ALL {
        let scale = if g == GeometryKind::Spherical {
            0.6
        } else {
            1.0
        };
        for seed in 0..50 {
            let p = sample_convex_polygon(3 + seed as usize % 6, g, scale, seed).unwrap();
            let f = to_canonical(&p.vertices()[0], &p.vertices()[1]).unwrap();
            let q = p.mapped(&f).unwrap();
            assert!((p.perimeter() - q.perimeter()).abs() < 1e-10);
            assert!((p.area_convex().unwrap() - q.area_convex().unwrap()).abs() < 1e-10);
            for (x, y) in p
                .interior_angles()
                .unwrap()
                .iter()
                .zip(q.interior_angles().unwrap())
            {
                assert!((x - y).abs() < 1e-10);
            }
        }
    }
}

#[test]
fn fan_area_matches_angle_sum_and_apex() {
    for g in GeometryKind::ALL {
        for seed in 0..200 {
            let n = 3 + seed as usize % 6;
            let p = sample_convex_polygon(n, g, 1.0, 1_000 + seed).unwrap();
            let fan = p.area_convex().unwrap();
            assert!((fan - p.gauss_bonnet_area().unwrap()).abs() < 1e-8);
            for k in 1..n {
                assert!((fan - p.rotated(k).area_convex().unwrap()).abs() < 1e-9);
            }
            assert!((p.perimeter() - p.rotated(1).perimeter()).abs() < 1e-12);
            if g == GeometryKind::Hyperbolic {
                assert!(fan < (n as f64 - 2.0) * PI);
            }
        }
    }
}

#[test]
fn regular_flag_matches_equilateral_and_equiangular() {
    let tol = ToleranceConfig::default().eps_converge();
    for g in GeometryKind::ALL {
        for seed in 0..100 {
            let p = sample_convex_polygon(3 + seed as usize % 6, g, 1.0, seed).unwrap();
            assert_eq!(
                p.is_regular(tol),
                p.is_equilateral(tol) && p.is_equiangular(tol)
            );
        }
        let r = isogon::build_regular(6, 1.5, g).unwrap();
        assert!(r.is_regular(tol) && r.is_equilateral(tol) && r.is_equiangular(tol));
    }
}

#[test]
fn regular_area_grows_with_perimeter_and_sides() {
    for g in CURVED {
        for n in 3..=12 {
            let mut last = 0.0;
            for k in 1..40 {
                let l = 0.15 * k as f64;
                let a = regular_area(n, l, g).unwrap();
                assert!(a > last, "{g} n={n} L={l}");
                if g == GeometryKind::Hyperbolic {
                    assert!(a < (n as f64 - 2.0) * PI);
                }
                last = a;
            }
        }
    }
    for g in GeometryKind::ALL {
        for l in [0.5, 1.0, 2.0] {
            for n in 3..12 {
                assert!(regular_area(n, l, g).unwrap() < regular_area(n + 1, l, g).unwrap());
            }
        }
    }
    for l in [0.5, 1.0, 2.0] {
        for n in 3..12 {
            let e = regular_area(n, l, GeometryKind::Euclidean).unwrap();
            let closed = l * l / (4.0 * n as f64 * (PI / n as f64).tan());
            assert!((e - closed).abs() < 1e-12);
        }
    }
}

#[test]
fn regular_area_flattens_as_perimeter_shrinks() {
    let ratio = |l: f64| {
        regular_area(6, l, GeometryKind::Hyperbolic).unwrap()
            / regular_area(6, l, GeometryKind::Euclidean).unwrap()
    };
    let (small, large) = (ratio(1e-2), ratio(1e-1));
    assert!((1.0 - small).abs() < (1.0 - large).abs());
    assert!(small < 1.0 && large < 1.0);
}

#[test]
fn symmetrization_stays_below_regular_area() {
    let cfg = ToleranceConfig::default();
    for g in GeometryKind::ALL {
        for seed in 0..20 {
            let n = 3 + seed as usize % 6;
            let p = sample_convex_polygon(n, g, 0.6, 7_000 + seed).unwrap();
            let bound = regular_area(n, p.perimeter(), g).unwrap();
            let r = symmetrize(&p, &cfg, 500).unwrap();
            assert!(r.converged, "{g} n={n}");
            assert!(r.area_trace.iter().all(|a| *a <= bound + 1e-9));
            if r.iterations > 0 {
                assert!(r.area_trace[1] > r.area_trace[0]);
            }
        }
    }
}
