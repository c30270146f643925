use pentile::atlas::family_pentagon;
use pentile::export::{export, from_json, to_json, to_obj, to_svg, Format};
use pentile_core::realize::{realize, RealizedTiling};
use pentile_core::tiling::{build_tiling, Family, Variant};

fn realized(family: Family, variant: Variant) -> RealizedTiling {
    let p = family_pentagon(family, variant.face_count() as u32).unwrap();
    realize(&build_tiling(family, variant).unwrap(), &p).unwrap()
}

#[test]
fn json_round_trips_exactly() {
    for (fam, var) in [(Family::One, Variant::T12e5), (Family::Two, Variant::T15bge2_3de3_3e5), (Family::One, Variant::T4b2g2_2e4)] {
        let r = realized(fam, var);
        let text = to_json(&r).unwrap();
        assert!(text.contains("\"schema\": \"pentile/realized/v1\""));
        let back = from_json(&text).unwrap();
        assert_eq!(back, r);
        assert_eq!(to_json(&back).unwrap(), text);
    }
    assert!(from_json(r#"{"schema":"x","vertices":[],"faces":[],"isometries":[],"max_closure_error":0}"#).is_err());
}

#[test]
fn obj_counts() {
    let text = to_obj(&realized(Family::One, Variant::T12e5));
    let count = |prefix: &str| text.lines().filter(|l| l.starts_with(prefix)).count();
    assert_eq!(count("v "), 92);
    assert_eq!(count("g "), 60);
    assert_eq!(count("f "), 180);
    // Indices are 1-based and in range.
    for l in text.lines().filter(|l| l.starts_with("f ")) {
        for i in l[2..].split(' ').map(|x| x.parse::<usize>().unwrap()) {
            assert!((1..=92).contains(&i));
        }
    }
}

#[test]
fn svg_structure() {
    let text = to_svg(&realized(Family::One, Variant::T6e4)).unwrap();
    assert!(text.starts_with("<svg") && text.trim_end().ends_with("</svg>"));
    assert!(text.contains("viewBox=\"0 0 1000 1000\""));
    let paths: Vec<&str> = text.lines().filter(|l| l.starts_with("<path")).collect();
    assert_eq!(paths.len(), 24);
    for p in paths {
        let segments = p.matches(" A ").count() + p.matches(" L ").count();
        assert_eq!(segments, 5, "{p}");
        assert!(p.contains(" A "), "boundary arcs are circular");
    }
}

#[test]
fn exports_are_deterministic() {
    let r = realized(Family::Two, Variant::T10bge2_6de3_4e5);
    for f in [Format::Json, Format::Obj, Format::Svg] {
        assert_eq!(export(&r, f).unwrap(), export(&r, f).unwrap());
    }
}
