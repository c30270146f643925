//! JSON documents for pentagons and vertex combinations.

use num_rational::Rational64;
use pentile_core::avc::AvcSet;
use pentile_core::pentagon::{AngleForm, Linear, PentagonSpec};
use pentile_core::{Angle, Radians};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub const PENTAGON_SCHEMA: &str = "pentile/pentagon/v1";
pub const AVC_SCHEMA: &str = "pentile/avc/v1";

#[derive(Debug, Error)]
pub enum DocError {
    #[error("bad rational {0:?}")]
    Rational(String),
    #[error("unexpected schema {0:?}")]
    Schema(String),
}

/// `q` and `r` are rationals written as `"p/q"`; the angle is
/// `(q + r/f)·π` when both are present.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AngleDoc {
    pub q: Option<String>,
    pub r: Option<String>,
    pub numeric: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AnglesDoc {
    pub alpha: AngleDoc,
    pub beta: AngleDoc,
    pub gamma: AngleDoc,
    pub delta: AngleDoc,
    pub epsilon: AngleDoc,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PentagonDoc {
    pub schema: String,
    pub f: Option<u32>,
    pub angles: AnglesDoc,
    /// Edge lengths in radians.
    pub a: f64,
    pub b: f64,
}

fn parse_ratio(s: &str) -> Result<Rational64, DocError> {
    s.parse().map_err(|_| DocError::Rational(s.into()))
}

impl AngleDoc {
    fn from_form(form: &AngleForm, f: Option<u32>) -> Self {
        Self {
            q: form.linear.map(|l| l.q.to_string()),
            r: form.linear.map(|l| l.r.to_string()),
            numeric: form.value(f),
        }
    }

    fn to_form(&self) -> Result<AngleForm, DocError> {
        let linear = match (&self.q, &self.r) {
            (Some(q), Some(r)) => Some(Linear { q: parse_ratio(q)?, r: parse_ratio(r)? }),
            _ => None,
        };
        Ok(AngleForm { linear, numeric: self.numeric })
    }
}

impl PentagonDoc {
    #[must_use]
    pub fn from_spec(p: &PentagonSpec) -> Self {
        let d = |a: Angle| AngleDoc::from_form(p.angle(a), p.f);
        Self {
            schema: PENTAGON_SCHEMA.into(),
            f: p.f,
            angles: AnglesDoc {
                alpha: d(Angle::Alpha),
                beta: d(Angle::Beta),
                gamma: d(Angle::Gamma),
                delta: d(Angle::Delta),
                epsilon: d(Angle::Epsilon),
            },
            a: p.a.0,
            b: p.b.0,
        }
    }

    pub fn to_spec(&self) -> Result<PentagonSpec, DocError> {
        if self.schema != PENTAGON_SCHEMA {
            return Err(DocError::Schema(self.schema.clone()));
        }
        Ok(PentagonSpec {
            f: self.f,
            alpha: self.angles.alpha.to_form()?,
            beta: self.angles.beta.to_form()?,
            gamma: self.angles.gamma.to_form()?,
            delta: self.angles.delta.to_form()?,
            epsilon: self.angles.epsilon.to_form()?,
            a: Radians(self.a),
            b: Radians(self.b),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexDoc {
    pub name: String,
    /// Counts of `α, β, γ, δ, ε`.
    pub counts: [u32; 5],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AvcDoc {
    pub schema: String,
    pub f: u32,
    pub vertices: Vec<VertexDoc>,
}

impl AvcDoc {
    #[must_use]
    pub fn from_set(set: &AvcSet) -> Self {
        let mut vertices: Vec<VertexDoc> = set.items.iter().map(|v| VertexDoc { name: v.to_string(), counts: v.0 }).collect();
        vertices.sort_by_key(|x| x.counts);
        Self { schema: AVC_SCHEMA.into(), f: set.f, vertices }
    }
}
