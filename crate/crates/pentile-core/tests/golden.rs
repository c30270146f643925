//! Reference angle and edge values, closed forms and the exclusion gaps.

use std::f64::consts::PI;

use approx::assert_abs_diff_eq;
use pentile_core::pentagon::{
    classify_symmetry, exclusion_checks, face_count, feasible_delta_runs, platonic_circumradius_cos, platonic_side_cos,
    solve_family1, solve_family2, solve_subdivision_family, Linear, PentagonError, SymmetryClass,
};
use pentile_core::{Angle, Radians, Reduction};

/// Four-digit values are compared at `1e-4·π`.
const REFERENCE: f64 = 1e-4;

fn in_pi(p: &pentile_core::PentagonSpec, a: Angle) -> f64 {
    p.value(a).unwrap() / PI
}

#[test]
fn family1_f24() {
    let p = solve_family1(24).unwrap();
    assert_abs_diff_eq!(p.a.in_pi(), 1.0 / 6.0, epsilon = 1e-12);
    assert_abs_diff_eq!(p.b.in_pi(), 0.2107, epsilon = REFERENCE);
    assert_abs_diff_eq!(in_pi(&p, Angle::Beta), 0.3883, epsilon = REFERENCE);
    assert_abs_diff_eq!(in_pi(&p, Angle::Delta), 1.0, epsilon = 1e-12);
    assert_abs_diff_eq!(p.b.cos(), (3.0 + 3f64.sqrt()) / 6.0, epsilon = 1e-10);
}

#[test]
fn family1_f60() {
    let p = solve_family1(60).unwrap();
    assert_abs_diff_eq!(p.a.in_pi(), 0.1229, epsilon = REFERENCE);
    assert_abs_diff_eq!(p.b.in_pi(), 0.1521, epsilon = REFERENCE);
    assert_abs_diff_eq!(in_pi(&p, Angle::Gamma), 0.5515, epsilon = REFERENCE);
    let s5 = 5f64.sqrt();
    let closed = (3.0 - s5 + (2.0 * (3.0 * s5 - 1.0)).sqrt()) / (2.0 * s5);
    assert_abs_diff_eq!(p.a.cos(), closed, epsilon = 1e-10);
}

#[test]
fn family2_f24() {
    let p = solve_family2(24).unwrap();
    // Independent check of `a`: the pentagon closes (see the oracle tests).
    assert_abs_diff_eq!(p.a.in_pi(), 0.179347, epsilon = 1e-6);
    assert_abs_diff_eq!(p.b.in_pi(), 0.1640, epsilon = REFERENCE);
    assert_abs_diff_eq!(in_pi(&p, Angle::Gamma), 0.7051, epsilon = REFERENCE);
}

#[test]
fn family2_f60() {
    let p = solve_family2(60).unwrap();
    assert_abs_diff_eq!(p.b.in_pi(), 0.1054, epsilon = REFERENCE);
    assert_abs_diff_eq!(in_pi(&p, Angle::Gamma), 0.7311, epsilon = REFERENCE);
    // Shares its a³ chain with family 1 at the same f.
    assert_abs_diff_eq!(p.a.0, solve_family1(60).unwrap().a.0, epsilon = 1e-12);
}

#[test]
fn linear_forms_attached() {
    let p = solve_family1(60).unwrap();
    assert_eq!(p.alpha.linear, Some(Linear::constant((2, 3))));
    assert_eq!(p.delta.linear, Some(Linear::new((4, 3), (-8, 1))));
    assert_eq!(p.epsilon.linear, Some(Linear::new((1, 3), (4, 1))));
    let q = solve_family2(24).unwrap();
    assert_eq!(q.delta.linear, Some(Linear::new((5, 6), (-2, 1))));
}

#[test]
fn angle_sums_match_face_count() {
    for p in [solve_family1(24), solve_family1(60), solve_family2(24), solve_family2(60)] {
        assert_abs_diff_eq!(p.unwrap().angle_sum_residual().unwrap(), 0.0, epsilon = 1e-10);
    }
}

#[test]
fn unsupported_face_counts() {
    assert_eq!(solve_family1(36), Err(PentagonError::UnsupportedFaceCount(36)));
    assert_eq!(solve_family2(12), Err(PentagonError::UnsupportedFaceCount(12)));
    assert!(face_count(6).is_err());
}

#[test]
fn platonic_geometry() {
    assert_eq!([3, 4, 5].map(|n| face_count(n).unwrap()), [12, 24, 60]);
    assert_abs_diff_eq!(platonic_side_cos(4).unwrap(), 0.0, epsilon = 1e-15);
    assert_abs_diff_eq!(platonic_side_cos(5).unwrap(), 1.0 / 5f64.sqrt(), epsilon = 1e-15);
    assert_abs_diff_eq!(platonic_side_cos(3).unwrap(), -1.0 / 3.0, epsilon = 1e-15);
    // Triangle centre to corner of the spherical icosahedron.
    let r = platonic_circumradius_cos(5).unwrap();
    assert_abs_diff_eq!(r * r, (5.0 + 2.0 * 5f64.sqrt()) / 15.0, epsilon = 1e-12);
}

#[test]
fn exclusion_gaps() {
    let r = exclusion_checks().unwrap();
    assert_eq!(r.entries.len(), 5);
    assert!(r.all_separated(1e-3 * PI));
    let gaps: Vec<f64> = r.entries.iter().map(|e| e.gap() / PI).collect();
    for (g, want) in gaps.iter().zip([0.13831, 0.04848, 0.04484, 0.06883, 0.01001]) {
        assert_abs_diff_eq!(*g, want, epsilon = 1e-5);
    }
    let swapped = r.entries.last().unwrap();
    assert_abs_diff_eq!(swapped.computed / PI, 0.8100, epsilon = REFERENCE);
    assert_eq!(r.swapped_cubic_roots.len(), 1);
    assert_abs_diff_eq!(r.swapped_cubic_roots[0], 0.9023, epsilon = 1e-4);
}

#[test]
fn subdivision_at_straight_delta() {
    let p = solve_subdivision_family(4, Reduction::CEqA, Radians(PI)).unwrap();
    assert_abs_diff_eq!(p.a.in_pi(), 0.130609, epsilon = 1e-6);
    assert_abs_diff_eq!(p.b.in_pi(), 0.256607, epsilon = 1e-6);
    assert_abs_diff_eq!(in_pi(&p, Angle::Alpha), 0.5, epsilon = 1e-12);
    // For the tetrahedron both reductions coincide.
    let x = solve_subdivision_family(3, Reduction::CEqA, Radians(PI)).unwrap();
    let y = solve_subdivision_family(3, Reduction::CEqB, Radians(PI)).unwrap();
    assert_abs_diff_eq!(x.a.0, y.a.0, epsilon = 1e-9);
    assert_abs_diff_eq!(x.b.0, y.b.0, epsilon = 1e-9);
}

#[test]
fn feasible_runs_contain_straight_delta() {
    for n in [3, 4, 5] {
        for red in [Reduction::CEqA, Reduction::CEqB] {
            let runs = feasible_delta_runs(n, red, 200);
            assert!(!runs.is_empty());
            assert!(runs.iter().any(|&(lo, hi)| lo < PI && PI < hi), "n={n} {red:?}: {runs:?}");
            assert!(runs.iter().all(|&(lo, hi)| 0.0 < lo && lo <= hi && hi < 2.0 * PI));
        }
    }
}

#[test]
fn family_pentagons_are_not_symmetric() {
    for p in [solve_family1(24), solve_family1(60), solve_family2(24), solve_family2(60)] {
        assert_ne!(classify_symmetry(&p.unwrap()).unwrap(), SymmetryClass::Symmetric);
    }
}
