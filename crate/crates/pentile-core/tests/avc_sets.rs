use std::collections::BTreeMap;

use pentile_core::avc::{
    check_balance, degree3_pair_compatible, enumerate_vertex_types, enumerate_with, group_by_f, solve_angles_from_base,
    solve_f_candidates, AngleSolution, AvcError, AvcSet, Filters, VertexPattern, VertexType,
};
use pentile_core::pentagon::{solve_family1, solve_family2, Linear};
use pentile_core::tiling::{build_tiling, census, Family};
use pentile_core::{Angle, PentagonSpec};

fn v(s: &str) -> VertexType {
    VertexType::parse(s).unwrap()
}

fn shown(p: PentagonSpec) -> String {
    AvcSet { f: p.f.unwrap(), items: enumerate_vertex_types(&p.values().unwrap(), 6) }.to_string()
}

#[test]
fn four_family_sets() {
    assert_eq!(shown(solve_family1(24).unwrap()), "α³ βγδ δε² β²γ² βγε² ε⁴");
    assert_eq!(shown(solve_family1(60).unwrap()), "α³ βγδ δε² β²γ²ε βγε³ ε⁵");
    assert_eq!(shown(solve_family2(24).unwrap()), "α³ βγδ δ²ε ε⁴");
    assert_eq!(shown(solve_family2(60).unwrap()), "α³ βγδ δ²ε βγε² δε³ ε⁵");
}

fn family1_forms() -> AngleSolution {
    solve_angles_from_base(&[v("a3"), v("bgd"), v("de2")], None).unwrap()
}

/// Family 1 angles at `f` with `β` and `γ` split evenly.
fn midpoint(f: u32) -> [f64; 5] {
    let s = family1_forms();
    let half = s.beta_gamma_sum().unwrap().radians(f) / 2.0;
    let at = |a| s.form(a).unwrap().radians(f);
    [at(Angle::Alpha), half, half, at(Angle::Delta), at(Angle::Epsilon)]
}

#[test]
fn f36_balanced() {
    let items = enumerate_with(&midpoint(36), Filters { balanced: true, ..Filters::default() });
    assert_eq!(AvcSet { f: 36, items }.to_string(), "α³ βγδ δε² αβγε");
}

#[test]
fn f36_midpoint_split_parity() {
    let with = enumerate_with(&midpoint(36), Filters::default());
    assert_eq!(AvcSet { f: 36, items: with.clone() }.to_string(), "α³ β²δ βγδ γ²δ δε² αβ²ε αβγε αγ²ε");
    let without = enumerate_with(&midpoint(36), Filters { parity: false, ..Filters::default() });
    assert!(without.len() > with.len());
    assert!(with.iter().all(|x| without.contains(x)));
    assert!(without.iter().any(|x| !x.parity_ok()));
}

#[test]
fn forms_from_base_vertices() {
    let s = family1_forms();
    assert_eq!(s.form(Angle::Alpha), Some(Linear::constant((2, 3))));
    assert_eq!(s.form(Angle::Delta), Some(Linear::new((4, 3), (-8, 1))));
    assert_eq!(s.form(Angle::Epsilon), Some(Linear::new((1, 3), (4, 1))));
    assert_eq!(s.beta_gamma_sum(), Some(Linear::new((2, 3), (8, 1))));
    assert!(s.require_determined().is_ok());

    let s2 = solve_angles_from_base(&[v("a3"), v("bgd"), v("d2e")], None).unwrap();
    assert_eq!(s2.form(Angle::Delta), Some(Linear::new((5, 6), (-2, 1))));
    assert_eq!(s2.beta_gamma_sum(), Some(Linear::new((7, 6), (2, 1))));
}

#[test]
fn underdetermined_base() {
    let s = solve_angles_from_base(&[v("a3")], None).unwrap();
    assert_eq!(s.free, vec![Angle::Beta, Angle::Gamma, Angle::Delta, Angle::Epsilon]);
    assert!(matches!(s.require_determined(), Err(AvcError::Underdetermined(_))));
}

#[test]
fn inconsistent_base() {
    // α³ forces α = 2π/3, α⁴ forces π/2.
    assert_eq!(solve_angles_from_base(&[v("a3"), v("a4")], None), Err(AvcError::Inconsistent));
}

#[test]
fn face_counts_for_family1() {
    let pattern = VertexPattern::new(&[Angle::Alpha, Angle::Beta, Angle::Gamma, Angle::Epsilon], 3, 6).excluding(&[v("a3")]);
    let sets: BTreeMap<u32, String> =
        group_by_f(&solve_f_candidates(&family1_forms(), &pattern)).into_iter().map(|s| (s.f, s.to_string())).collect();
    assert_eq!(sets.get(&24).map(String::as_str), Some("β²γ² βγε² ε⁴"));
    assert_eq!(sets.get(&36).map(String::as_str), Some("αβγε"));
    assert_eq!(sets.get(&60).map(String::as_str), Some("β²γ²ε βγε³ ε⁵"));
}

#[test]
fn face_counts_for_family2() {
    let forms = solve_angles_from_base(&[v("a3"), v("bgd"), v("d2e")], None).unwrap();
    let sets: BTreeMap<u32, String> = group_by_f(&solve_f_candidates(&forms, &VertexPattern::new(&Angle::ALL, 4, 5)))
        .into_iter()
        .map(|s| (s.f, s.to_string()))
        .collect();
    assert_eq!(sets.get(&24).map(String::as_str), Some("ε⁴"));
    assert_eq!(sets.get(&60).map(String::as_str), Some("βγε² δε³ ε⁵"));
}

#[test]
fn built_tilings_are_balanced() {
    for fam in Family::ALL {
        for &var in fam.variants() {
            let c = census(&build_tiling(fam, var).unwrap());
            assert!(check_balance(&c.counts, var.face_count() as u32), "{fam} {var}");
        }
    }
    let mut lopsided = BTreeMap::new();
    lopsided.insert(v("b2d"), 24);
    assert!(!check_balance(&lopsided, 24));
}

#[test]
fn degree3_pairs() {
    // Together these give β = γ.
    assert_eq!(degree3_pair_compatible(v("bgd"), v("b2d")), Ok(false));
    assert_eq!(degree3_pair_compatible(v("bgd"), v("g2e")), Ok(true));
    assert_eq!(degree3_pair_compatible(v("g2e"), v("b2d")), Ok(true));
    assert_eq!(degree3_pair_compatible(v("bge"), v("bge")), Ok(true));
    assert!(matches!(degree3_pair_compatible(v("a3"), v("bgd")), Err(AvcError::NotSingleBEdge(_))));
}

#[test]
fn notation() {
    assert_eq!(v("b2g2e").to_string(), "β²γ²ε");
    assert_eq!(VertexType::parse("β²γ²ε").unwrap(), v("b2g2e"));
    assert_eq!(v("bge3").ascii(), "bge3");
    assert!(VertexType::parse("x2").is_err());
    // The edge rule: α sits between two b-edges, so next to δ or ε it
    // needs a β or γ.
    assert!(!v("ae3").edges_ok());
    assert!(v("abge").edges_ok());
}
