//! JSON, OBJ and SVG output for realized tilings.

use std::f64::consts::PI;
use std::fmt::Write as _;

use pentile_core::geom::{self, Vec3, NORTH};
use pentile_core::realize::{Isometry, RealizedTiling};
use pentile_core::{Angle, Edge};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub const REALIZED_SCHEMA: &str = "pentile/realized/v1";

/// Minimum angular distance between the projection pole and any vertex.
pub const POLE_CLEARANCE: f64 = 1e-3;
const POLE_ATTEMPTS: u32 = 64;

pub const SVG_SIZE: f64 = 1000.0;
/// Pixels per unit of the projection plane; the great circle at distance
/// `π/2` from the pole is drawn with this radius.
const SVG_SCALE: f64 = 250.0;

#[derive(Debug, Error)]
pub enum ExportError {
    #[error("no projection pole clear of every vertex after {0} attempts")]
    PoleCollision(u32),
    #[error("unexpected schema {0:?}")]
    Schema(String),
    #[error("unknown label {0:?}")]
    Label(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Obj,
    Svg,
}

pub fn export(r: &RealizedTiling, format: Format) -> Result<String, ExportError> {
    match format {
        Format::Json => to_json(r),
        Format::Obj => Ok(to_obj(r)),
        Format::Svg => to_svg(r),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
struct FaceDoc {
    vertices: [usize; 5],
    angles: [String; 5],
    edges: [String; 5],
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
struct RealizedDoc {
    schema: String,
    vertices: Vec<Vec3>,
    faces: Vec<FaceDoc>,
    isometries: Vec<[[f64; 3]; 3]>,
    max_closure_error: f64,
}

pub fn to_json(r: &RealizedTiling) -> Result<String, ExportError> {
    let doc = RealizedDoc {
        schema: REALIZED_SCHEMA.into(),
        vertices: r.vertices.clone(),
        faces: r
            .faces
            .iter()
            .zip(&r.labels)
            .map(|(f, l)| FaceDoc {
                vertices: *f,
                angles: l.map(|(a, _)| a.name().to_string()),
                edges: l.map(|(_, e)| e.name().to_string()),
            })
            .collect(),
        isometries: r.isometries.iter().map(|m| m.0).collect(),
        max_closure_error: r.max_closure_error,
    };
    let mut s = serde_json::to_string_pretty(&doc)?;
    s.push('\n');
    Ok(s)
}

pub fn from_json(text: &str) -> Result<RealizedTiling, ExportError> {
    let doc: RealizedDoc = serde_json::from_str(text)?;
    if doc.schema != REALIZED_SCHEMA {
        return Err(ExportError::Schema(doc.schema));
    }
    let mut labels = Vec::with_capacity(doc.faces.len());
    for f in &doc.faces {
        let mut l = [(Angle::Alpha, Edge::A); 5];
        for (slot, (a, e)) in l.iter_mut().zip(f.angles.iter().zip(&f.edges)) {
            *slot = (
                Angle::from_name(a).ok_or_else(|| ExportError::Label(a.clone()))?,
                Edge::from_name(e).ok_or_else(|| ExportError::Label(e.clone()))?,
            );
        }
        labels.push(l);
    }
    Ok(RealizedTiling {
        vertices: doc.vertices,
        faces: doc.faces.iter().map(|f| f.vertices).collect(),
        labels,
        isometries: doc.isometries.into_iter().map(Isometry).collect(),
        max_closure_error: doc.max_closure_error,
    })
}

fn corner_angle(r: &RealizedTiling, f: &[usize; 5], k: usize) -> f64 {
    geom::interior_angle(r.vertices[f[(k + 4) % 5]], r.vertices[f[k]], r.vertices[f[(k + 1) % 5]])
}

/// Wavefront OBJ: each tile is a group of three triangles fanned from its
/// largest corner.
#[must_use]
pub fn to_obj(r: &RealizedTiling) -> String {
    let mut s = String::from("# pentile realized tiling\n");
    for v in &r.vertices {
        let _ = writeln!(s, "v {} {} {}", v[0], v[1], v[2]);
    }
    for (i, f) in r.faces.iter().enumerate() {
        let apex = (0..5).fold(0, |best, k| if corner_angle(r, f, k) > corner_angle(r, f, best) { k } else { best });
        let _ = writeln!(s, "g tile{i}");
        for j in 1..4 {
            let (b, c) = (f[(apex + j) % 5], f[(apex + j + 1) % 5]);
            let _ = writeln!(s, "f {} {} {}", f[apex] + 1, b + 1, c + 1);
        }
    }
    s
}

/// Stereographic projection from `pole` onto the plane through the centre.
struct Projection {
    pole: Vec3,
    e1: Vec3,
    e2: Vec3,
}

impl Projection {
    fn new(pole: Vec3) -> Self {
        let x = if pole[0].abs() < 0.9 { [1.0, 0.0, 0.0] } else { [0.0, 1.0, 0.0] };
        let e1 = geom::normalize(geom::sub(x, geom::scale(geom::dot(x, pole), pole)));
        let e2 = geom::cross(pole, e1);
        Self { pole, e1, e2 }
    }

    /// Pixel coordinates, `y` downwards.
    fn apply(&self, v: Vec3) -> [f64; 2] {
        let d = 1.0 - geom::dot(v, self.pole);
        let (x, y) = (geom::dot(v, self.e1) / d, geom::dot(v, self.e2) / d);
        [SVG_SIZE / 2.0 + SVG_SCALE * x, SVG_SIZE / 2.0 - SVG_SCALE * y]
    }
}

/// Poles tried in order: the north pole, then points spiralling away from it.
fn pole_candidates() -> impl Iterator<Item = Vec3> {
    const GOLDEN_ANGLE: f64 = 2.399_963_229_728_653;
    (0..POLE_ATTEMPTS).map(|k| {
        if k == 0 {
            return NORTH;
        }
        let t = 0.05 * f64::from(k);
        let phi = GOLDEN_ANGLE * f64::from(k);
        [t.sin() * phi.cos(), t.sin() * phi.sin(), t.cos()]
    })
}

fn choose_pole(vertices: &[Vec3]) -> Result<Vec3, ExportError> {
    pole_candidates()
        .find(|&p| vertices.iter().all(|&v| geom::arc_length(p, v) >= POLE_CLEARANCE))
        .ok_or(ExportError::PoleCollision(POLE_ATTEMPTS))
}

fn circumcircle(a: [f64; 2], b: [f64; 2], c: [f64; 2]) -> Option<([f64; 2], f64)> {
    let d = 2.0 * (a[0] * (b[1] - c[1]) + b[0] * (c[1] - a[1]) + c[0] * (a[1] - b[1]));
    let scale = [a, b, c].iter().map(|p| p[0].abs().max(p[1].abs())).fold(1.0, f64::max);
    if d.abs() < 1e-9 * scale * scale {
        return None;
    }
    let n = |p: [f64; 2]| p[0] * p[0] + p[1] * p[1];
    let ux = (n(a) * (b[1] - c[1]) + n(b) * (c[1] - a[1]) + n(c) * (a[1] - b[1])) / d;
    let uy = (n(a) * (c[0] - b[0]) + n(b) * (a[0] - c[0]) + n(c) * (b[0] - a[0])) / d;
    Some(([ux, uy], ((a[0] - ux).powi(2) + (a[1] - uy).powi(2)).sqrt()))
}

/// Path segment drawing the image of the short great arc from `u` to `v`.
/// Great circles project to circles through the images of `u`, `v`, `−u`.
fn arc_command(proj: &Projection, u: Vec3, v: Vec3) -> String {
    let (pu, pv) = (proj.apply(u), proj.apply(v));
    let pm = proj.apply(geom::normalize(geom::add(u, v)));
    let Some((c, r)) = circumcircle(pu, pv, proj.apply(geom::scale(-1.0, u))) else {
        return format!(" L {:.3} {:.3}", pv[0], pv[1]);
    };
    let ang = |p: [f64; 2]| (p[1] - c[1]).atan2(p[0] - c[0]);
    let turn = |from: f64, to: f64| (to - from).rem_euclid(2.0 * PI);
    let (to_v, to_m) = (turn(ang(pu), ang(pv)), turn(ang(pu), ang(pm)));
    // In pixel coordinates increasing atan2 is the positive sweep.
    let sweep = to_m < to_v;
    let span = if sweep { to_v } else { 2.0 * PI - to_v };
    format!(" A {r:.3} {r:.3} 0 {} {} {:.3} {:.3}", u8::from(span > PI), u8::from(sweep), pv[0], pv[1])
}

/// Stereographic picture, one closed path per tile. Reflected tiles are
/// shaded differently.
pub fn to_svg(r: &RealizedTiling) -> Result<String, ExportError> {
    let pole = choose_pole(&r.vertices)?;
    let proj = Projection::new(pole);
    let mut s = String::new();
    let _ = writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{SVG_SIZE}\" height=\"{SVG_SIZE}\" viewBox=\"0 0 {SVG_SIZE} {SVG_SIZE}\">"
    );
    let _ = writeln!(s, "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>");
    for (i, (f, iso)) in r.faces.iter().zip(&r.isometries).enumerate() {
        let start = proj.apply(r.vertices[f[0]]);
        let mut d = format!("M {:.3} {:.3}", start[0], start[1]);
        for k in 0..5 {
            d.push_str(&arc_command(&proj, r.vertices[f[k]], r.vertices[f[(k + 1) % 5]]));
        }
        d.push_str(" Z");
        let fill = if iso.det() < 0.0 { "#f2d49b" } else { "#9bc2f2" };
        let _ = writeln!(s, "<path id=\"tile{i}\" d=\"{d}\" fill=\"{fill}\" fill-opacity=\"0.6\" stroke=\"#222\" stroke-width=\"1\"/>");
    }
    s.push_str("</svg>\n");
    Ok(s)
}
