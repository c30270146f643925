//! Every tiling of both families, built, checked and placed on the sphere.

use std::f64::consts::PI;
use std::fmt;

use pentile_core::avc::{enumerate_vertex_types, enumerate_with, solve_angles_from_base, AvcSet, Filters, VertexType};
use pentile_core::pentagon::{solve_family1, solve_family2, PentagonError};
use pentile_core::realize::{holonomy, realize};
use pentile_core::tiling::{build_tiling, verify_with_tol, Family, Variant};
use pentile_core::{Angle, PentagonSpec};
use serde::Serialize;

use crate::Error;

pub const ATLAS_SCHEMA: &str = "pentile/atlas/v1";

pub fn family_pentagon(family: Family, f: u32) -> Result<PentagonSpec, PentagonError> {
    match family {
        Family::One => solve_family1(f),
        Family::Two => solve_family2(f),
    }
}

/// Degree-three vertices every tiling of the family contains.
#[must_use]
pub fn base_vertices(family: Family) -> [VertexType; 3] {
    let v = |s: &str| VertexType::parse(s).expect("valid vertex");
    match family {
        Family::One => [v("a3"), v("bgd"), v("de2")],
        Family::Two => [v("a3"), v("bgd"), v("d2e")],
    }
}

/// Candidate vertices for a family at `f`. Face counts with a solved
/// pentagon use its angles. Other face counts use the angles forced by the
/// base vertices with `β = γ`, keeping only vertices with as many `β` as `γ`.
pub fn family_avc(family: Family, f: u32, max_degree: u32) -> Result<AvcSet, Error> {
    match family_pentagon(family, f) {
        Ok(p) => Ok(AvcSet { f, items: enumerate_vertex_types(&p.values()?, max_degree) }),
        Err(PentagonError::UnsupportedFaceCount(_)) => {
            let forms = solve_angles_from_base(&base_vertices(family), None)?;
            let value = |a: Angle| forms.form(a).map(|l| l.radians(f));
            let half = forms.beta_gamma_sum().map(|l| l.radians(f) / 2.0);
            let (Some(alpha), Some(bg), Some(delta), Some(epsilon)) =
                (value(Angle::Alpha), half, value(Angle::Delta), value(Angle::Epsilon))
            else {
                return Err(pentile_core::avc::AvcError::Underdetermined(forms.free.clone()).into());
            };
            let filters = Filters { max_degree, balanced: true, ..Filters::default() };
            Ok(AvcSet { f, items: enumerate_with(&[alpha, bg, bg, delta, epsilon], filters) })
        }
        Err(e) => Err(e.into()),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AtlasRow {
    pub family: u32,
    pub variant: String,
    pub f: usize,
    pub vertices: u32,
    pub census: String,
    pub verified: bool,
    pub closure: f64,
    pub holonomy: f64,
    /// Measured area minus `4π`.
    pub area: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Atlas {
    pub schema: &'static str,
    pub tol: f64,
    pub rows: Vec<AtlasRow>,
}

impl Atlas {
    #[must_use]
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.verified && r.census == r.variant)
    }
}

pub fn row(family: Family, variant: Variant, tol: f64) -> Result<AtlasRow, Error> {
    let f = variant.face_count();
    let p = family_pentagon(family, u32::try_from(f).expect("face count fits"))?;
    let map = build_tiling(family, variant)?;
    let report = verify_with_tol(&map, &p, tol);
    let placed = realize(&map, &p)?;
    let hol = holonomy(&map, &p)?.into_iter().fold(0.0, f64::max);
    Ok(AtlasRow {
        family: family.number(),
        variant: variant.name().into(),
        f,
        vertices: report.census.vertex_count(),
        census: report.census.variant_name(),
        verified: report.passed(),
        closure: placed.max_closure_error,
        holonomy: hol,
        area: placed.total_area() - 4.0 * PI,
    })
}

/// Rows in family order, then in the family's own variant order.
pub fn build_atlas(tol: f64) -> Result<Atlas, Error> {
    let rows = Family::ALL
        .into_iter()
        .flat_map(|fam| fam.variants().iter().map(move |&v| (fam, v)))
        .map(|(fam, v)| row(fam, v, tol))
        .collect::<Result<_, _>>()?;
    Ok(Atlas { schema: ATLAS_SCHEMA, tol, rows })
}

impl fmt::Display for Atlas {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{:<4} {:<19} {:>3} {:>3}  {:<6}  {:>7}  {:>8}  {:>8}",
            "fam", "variant", "f", "V", "verify", "closure", "holonomy", "area-4pi"
        )?;
        for r in &self.rows {
            writeln!(
                f,
                "{:<4} {:<19} {:>3} {:>3}  {:<6}  {:>7.0e}  {:>8.0e}  {:>8.0e}",
                r.family,
                r.variant,
                r.f,
                r.vertices,
                if r.verified { "ok" } else { "FAIL" },
                r.closure,
                r.holonomy,
                r.area.abs()
            )?;
        }
        Ok(())
    }
}
