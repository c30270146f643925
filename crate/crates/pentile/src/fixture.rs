//! Tilings on disk: one JSON object per map, one face per line.

use std::fmt::Write as _;

use pentile_core::tiling::{Corner, HalfEdgeMap, TilingError};
use pentile_core::{Angle, Edge};
use serde::Deserialize;
use thiserror::Error;

pub const FIXTURE_SCHEMA: &str = "pentile/fixture/v1";

#[derive(Debug, Error)]
pub enum FixtureError {
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error("unexpected schema {0:?}")]
    Schema(String),
    #[error("unknown angle {0:?}")]
    Angle(String),
    #[error("unknown edge label {0:?}")]
    Edge(String),
    #[error("face {0} has {1} corners")]
    Arity(usize, usize),
    #[error("twin reference {0:?} out of range")]
    TwinRef([usize; 2]),
    #[error(transparent)]
    Map(#[from] TilingError),
}

#[derive(Debug, Deserialize)]
struct CornerRecord {
    angle: String,
    edge_label: String,
    twin_ref: [usize; 2],
}

#[derive(Debug, Deserialize)]
struct FixtureDoc {
    schema: String,
    name: String,
    faces: Vec<Vec<CornerRecord>>,
}

/// A named map read from a fixture.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fixture {
    pub name: String,
    pub map: HalfEdgeMap,
}

/// Canonical text: fixed key order, one face per line, trailing newline.
#[must_use]
pub fn to_string(name: &str, map: &HalfEdgeMap) -> String {
    let mut s = String::new();
    s.push_str("{\n");
    let _ = writeln!(s, "  \"schema\": {},", serde_json::Value::from(FIXTURE_SCHEMA));
    let _ = writeln!(s, "  \"name\": {},", serde_json::Value::from(name));
    s.push_str("  \"faces\": [\n");
    let n = map.face_count();
    for f in 0..n {
        s.push_str("    [");
        for k in 0..5 {
            let c = map.corner(5 * f + k);
            if k > 0 {
                s.push_str(", ");
            }
            let _ = write!(
                s,
                "{{\"angle\": \"{}\", \"edge_label\": \"{}\", \"twin_ref\": [{}, {}]}}",
                c.angle.name(),
                c.edge.name(),
                c.twin / 5,
                c.twin % 5
            );
        }
        s.push(']');
        if f + 1 < n {
            s.push(',');
        }
        s.push('\n');
    }
    s.push_str("  ]\n}\n");
    s
}

pub fn from_str(text: &str) -> Result<Fixture, FixtureError> {
    let doc: FixtureDoc = serde_json::from_str(text)?;
    if doc.schema != FIXTURE_SCHEMA {
        return Err(FixtureError::Schema(doc.schema));
    }
    let faces = doc.faces.len();
    let mut corners = Vec::with_capacity(5 * faces);
    for (f, face) in doc.faces.iter().enumerate() {
        if face.len() != 5 {
            return Err(FixtureError::Arity(f, face.len()));
        }
        for c in face {
            let angle = Angle::from_name(&c.angle).ok_or_else(|| FixtureError::Angle(c.angle.clone()))?;
            let edge = Edge::from_name(&c.edge_label).ok_or_else(|| FixtureError::Edge(c.edge_label.clone()))?;
            let [g, k] = c.twin_ref;
            if g >= faces || k >= 5 {
                return Err(FixtureError::TwinRef(c.twin_ref));
            }
            corners.push(Corner { angle, edge, twin: 5 * g + k });
        }
    }
    Ok(Fixture { name: doc.name, map: HalfEdgeMap::from_corners(corners)? })
}

/// File name used for a variant in the shipped fixture directory.
#[must_use]
pub fn file_name(variant: &str) -> String {
    format!("{}.json", variant.to_ascii_lowercase())
}
