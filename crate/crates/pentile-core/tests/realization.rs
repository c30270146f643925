use std::f64::consts::PI;

use approx::assert_abs_diff_eq;
use pentile_core::geom;
use pentile_core::pentagon::{solve_family1, solve_family2, AngleForm};
use pentile_core::realize::{holonomy, pentagon_template, realize, Isometry, RealizeError};
use pentile_core::tiling::{build_family1_tiling, build_tiling, Family, Variant};
use pentile_core::{PentagonSpec, Radians};

fn pentagon(family: Family, f: usize) -> PentagonSpec {
    match family {
        Family::One => solve_family1(f as u32).unwrap(),
        Family::Two => solve_family2(f as u32).unwrap(),
    }
}

#[test]
fn every_pair_closes() {
    for fam in Family::ALL {
        for &var in fam.variants() {
            let f = var.face_count();
            let p = pentagon(fam, f);
            let map = build_tiling(fam, var).unwrap();
            let r = realize(&map, &p).unwrap();
            assert!(r.max_closure_error < 1e-8, "{fam} {var}: {}", r.max_closure_error);
            assert!(r.norm_error() < 1e-12);
            assert!(r.edge_length_error(&p) < 1e-8);
            assert!(r.angle_error(&p).unwrap() < 1e-8);
            assert_abs_diff_eq!(r.total_area(), 4.0 * PI, epsilon = 1e-6);
            for e in r.face_excess() {
                assert_abs_diff_eq!(e, 4.0 * PI / f as f64, epsilon = 1e-8);
            }
            let worst = holonomy(&map, &p).unwrap().into_iter().fold(0.0, f64::max);
            assert!(worst < 1e-8, "{fam} {var}: holonomy {worst}");
            for q in &r.isometries {
                assert!(q.orthogonality_error() < 1e-12);
                assert_abs_diff_eq!(q.det().abs(), 1.0, epsilon = 1e-12);
            }
            assert_eq!(r.vertices.len(), if f == 24 { 38 } else { 92 });
        }
    }
}

#[test]
fn reflected_tiles_only_in_reversed_caps() {
    let mirrored = |var: Variant| {
        let r = realize(&build_family1_tiling(var).unwrap(), &solve_family1(var.face_count() as u32).unwrap()).unwrap();
        r.isometries.iter().filter(|q| q.det() < 0.0).count()
    };
    assert_eq!(mirrored(Variant::T6e4), 0);
    assert_eq!(mirrored(Variant::T12e5), 0);
    // Tiles of the reversed cap are reflected, the rest are not.
    let m = mirrored(Variant::T5bge3_7e5);
    assert!(m > 0 && m < 60, "{m}");
}

#[test]
fn mismatched_pentagon_diverges() {
    let map = build_family1_tiling(Variant::T6e4).unwrap();
    assert!(matches!(realize(&map, &solve_family2(60).unwrap()), Err(RealizeError::Divergence(_))));
}

#[test]
fn template_corners() {
    // Family 1 at f = 24 has δ = π: B, D, E lie on one great circle.
    let p = solve_family1(24).unwrap();
    let [_, b, d, e, _] = pentagon_template(&p).unwrap();
    assert_abs_diff_eq!(geom::dot(geom::cross(b, e), d), 0.0, epsilon = 1e-12);

    let p = solve_family1(60).unwrap();
    let t = pentagon_template(&p).unwrap();
    // Corners in order A, B, D, E, C; γ is at C.
    let gamma = geom::interior_angle(t[3], t[4], t[0]);
    assert_abs_diff_eq!(gamma / PI, 0.5515, epsilon = 1e-4);
    assert_abs_diff_eq!(t[0][2], 1.0, epsilon = 1e-15);
}

#[test]
fn symmetric_template_is_mirror_symmetric() {
    // A symmetric walk, with β chosen by bisection so that DE = a.
    let (alpha, a, b) = (2.0, 0.5, 0.6);
    let x = [1.0, 0.0, 0.0];
    let walk = |beta: f64| {
        let bp = geom::advance(geom::NORTH, x, b).0;
        let c = geom::advance(geom::NORTH, geom::rotate_about(x, geom::NORTH, alpha), b).0;
        let d = geom::advance(bp, geom::rotate_about(geom::tangent_towards(bp, geom::NORTH), bp, -beta), a).0;
        let e = geom::advance(c, geom::rotate_about(geom::tangent_towards(c, geom::NORTH), c, beta), a).0;
        [geom::NORTH, bp, d, e, c]
    };
    let excess = |beta: f64| {
        let w = walk(beta);
        geom::arc_length(w[2], w[3]) - a
    };
    let (mut lo, mut hi) = (1.0, 3.0);
    assert!(excess(lo) * excess(hi) < 0.0);
    for _ in 0..100 {
        let mid = 0.5 * (lo + hi);
        if excess(lo) * excess(mid) <= 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    let corners = walk(lo);
    let m = |k: usize| geom::interior_angle(corners[(k + 4) % 5], corners[k], corners[(k + 1) % 5]);
    let p = PentagonSpec {
        f: None,
        alpha: AngleForm::numeric(m(0)),
        beta: AngleForm::numeric(m(1)),
        gamma: AngleForm::numeric(m(4)),
        delta: AngleForm::numeric(m(2)),
        epsilon: AngleForm::numeric(m(3)),
        a: Radians(a),
        b: Radians(b),
    };
    let t = pentagon_template(&p).unwrap();
    // Reflection across the plane bisecting the angle at A.
    let axis = geom::normalize(geom::add(geom::sub(t[1], geom::scale(geom::dot(t[1], t[0]), t[0])), geom::sub(t[4], geom::scale(geom::dot(t[4], t[0]), t[0]))));
    let n = geom::normalize(geom::cross(t[0], axis));
    let reflect = |v: [f64; 3]| geom::sub(v, geom::scale(2.0 * geom::dot(v, n), n));
    for (i, j) in [(1, 4), (2, 3)] {
        assert!(geom::norm(geom::sub(reflect(t[i]), t[j])) < 1e-10);
    }
}

#[test]
fn isometry_algebra() {
    let q = Isometry::aligning(geom::NORTH, [1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]);
    assert!(q.orthogonality_error() < 1e-12);
    let back = q.compose(&q.inverse());
    assert!(back.distance(&Isometry::IDENTITY) < 1e-12);
    assert_abs_diff_eq!(Isometry::MIRROR.det(), -1.0);
}
