//! Placing a verified tiling on the unit sphere.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

use libm::fabs;
use thiserror::Error;

use crate::geom::{self, Vec3};
use crate::label::{match_pattern, Angle, Edge};
use crate::pentagon::{PentagonError, PentagonSpec};
use crate::tiling::HalfEdgeMap;

/// Largest disagreement tolerated while propagating before giving up.
pub const DIVERGENCE_LIMIT: f64 = 1e-3;

#[derive(Clone, Debug, PartialEq, Error)]
pub enum RealizeError {
    #[error(transparent)]
    Pentagon(#[from] PentagonError),
    #[error("template pentagon misses closing by {0:e}")]
    OpenTemplate(f64),
    #[error("template pentagon is not simple")]
    NotSimple,
    #[error("face {0} does not carry the pentagon pattern")]
    FacePattern(usize),
    #[error("face {0} is not reachable from face 0")]
    Disconnected(usize),
    #[error("placements disagree by {0:e} radians")]
    Divergence(f64),
}

/// Orthogonal map of 3-space, stored by rows.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Isometry(pub [[f64; 3]; 3]);

impl Isometry {
    pub const IDENTITY: Isometry = Isometry([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]);

    /// Reflection in the plane `y = 0`.
    pub const MIRROR: Isometry = Isometry([[1.0, 0.0, 0.0], [0.0, -1.0, 0.0], [0.0, 0.0, 1.0]]);

    #[must_use]
    pub fn apply(&self, v: Vec3) -> Vec3 {
        self.0.map(|row| geom::dot(row, v))
    }

    /// `self ∘ other`.
    #[must_use]
    pub fn compose(&self, other: &Isometry) -> Isometry {
        Isometry(core::array::from_fn(|i| core::array::from_fn(|j| (0..3).map(|k| self.0[i][k] * other.0[k][j]).sum())))
    }

    #[must_use]
    pub fn inverse(&self) -> Isometry {
        Isometry(core::array::from_fn(|i| core::array::from_fn(|j| self.0[j][i])))
    }

    #[must_use]
    pub fn det(&self) -> f64 {
        geom::dot(self.0[0], geom::cross(self.0[1], self.0[2]))
    }

    /// Largest entry of `MᵀM − I`.
    #[must_use]
    pub fn orthogonality_error(&self) -> f64 {
        let p = self.inverse().compose(self);
        let mut worst: f64 = 0.0;
        for (i, row) in p.0.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                worst = worst.max(fabs(x - if i == j { 1.0 } else { 0.0 }));
            }
        }
        worst
    }

    /// Largest entry of `self − other`.
    #[must_use]
    pub fn distance(&self, other: &Isometry) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..3 {
            for j in 0..3 {
                worst = worst.max(fabs(self.0[i][j] - other.0[i][j]));
            }
        }
        worst
    }

    /// The rotation taking `l1 ↦ w1` and the direction of `l2` from `l1`
    /// to that of `w2` from `w1`.
    #[must_use]
    pub fn aligning(l1: Vec3, l2: Vec3, w1: Vec3, w2: Vec3) -> Isometry {
        let frame = |u: Vec3, v: Vec3| {
            let n = geom::normalize(geom::cross(u, v));
            [u, n, geom::cross(u, n)]
        };
        // Columns of each frame are the listed vectors: M = Fw · Flᵀ.
        let (fl, fw) = (frame(l1, l2), frame(w1, w2));
        Isometry(core::array::from_fn(|i| core::array::from_fn(|j| (0..3).map(|k| fw[k][i] * fl[k][j]).sum())))
    }
}

/// Corners of `p` with `A` at the north pole and `AB` heading along `+x`,
/// in the order `A, B, D, E, C` (counterclockwise seen from outside).
pub fn pentagon_template(p: &PentagonSpec) -> Result<[Vec3; 5], RealizeError> {
    let (pts, miss) = p.trace()?;
    if miss > 1e-9 {
        return Err(RealizeError::OpenTemplate(miss));
    }
    if !geom::is_simple(&pts) {
        return Err(RealizeError::NotSimple);
    }
    Ok(pts)
}

/// A tiling placed on the sphere.
#[derive(Clone, Debug, PartialEq)]
pub struct RealizedTiling {
    pub vertices: Vec<Vec3>,
    /// Vertex index of each corner, counterclockwise.
    pub faces: Vec<[usize; 5]>,
    /// Angle at each corner and label of the edge leaving it.
    pub labels: Vec<[(Angle, Edge); 5]>,
    /// Map from the template to each face; determinant `−1` for reflected
    /// tiles.
    pub isometries: Vec<Isometry>,
    /// Largest disagreement between faces about where a vertex is.
    pub max_closure_error: f64,
}

/// Template positions of every corner of one face, in face order, with the
/// reflection already applied to mirrored tiles.
fn local_corners(map: &HalfEdgeMap, template: &[Vec3; 5], f: usize) -> Result<([Vec3; 5], bool), RealizeError> {
    let (r, mirrored) = match_pattern(&map.face_pattern(f)).ok_or(RealizeError::FacePattern(f))?;
    Ok((
        core::array::from_fn(|j| {
            let k = (j + 5 - r) % 5;
            if mirrored {
                Isometry::MIRROR.apply(template[(5 - k) % 5])
            } else {
                template[k]
            }
        }),
        mirrored,
    ))
}

/// Placement of the face across half-edge `h` from a face placed by `q`.
fn across(map: &HalfEdgeMap, locals: &[[Vec3; 5]], q: &Isometry, h: usize) -> Isometry {
    let (f, k) = (h / 5, h % 5);
    let x = q.apply(locals[f][k]);
    let y = q.apply(locals[f][(k + 1) % 5]);
    let t = map.twin(h);
    let (g, j) = (t / 5, t % 5);
    Isometry::aligning(locals[g][j], locals[g][(j + 1) % 5], y, x)
}

struct Placement {
    locals: Vec<[Vec3; 5]>,
    mirrored: Vec<bool>,
    rotations: Vec<Isometry>,
}

fn place(map: &HalfEdgeMap, p: &PentagonSpec) -> Result<Placement, RealizeError> {
    let template = pentagon_template(p)?;
    let n = map.face_count();
    let mut locals = Vec::with_capacity(n);
    let mut mirrored = Vec::with_capacity(n);
    for f in 0..n {
        let (l, m) = local_corners(map, &template, f)?;
        locals.push(l);
        mirrored.push(m);
    }
    let mut rotations: Vec<Option<Isometry>> = vec![None; n];
    rotations[0] = Some(Isometry::IDENTITY);
    let mut queue = VecDeque::from([0usize]);
    while let Some(f) = queue.pop_front() {
        let q = rotations[f].expect("queued faces are placed");
        for h in 5 * f..5 * f + 5 {
            let g = map.twin(h) / 5;
            if rotations[g].is_none() {
                rotations[g] = Some(across(map, &locals, &q, h));
                queue.push_back(g);
            }
        }
    }
    let rotations = rotations.into_iter().enumerate().map(|(f, r)| r.ok_or(RealizeError::Disconnected(f))).collect::<Result<_, _>>()?;
    Ok(Placement { locals, mirrored, rotations })
}

/// Place every face by breadth-first propagation from face 0 and average
/// the resulting vertex positions.
pub fn realize(map: &HalfEdgeMap, p: &PentagonSpec) -> Result<RealizedTiling, RealizeError> {
    let pl = place(map, p)?;
    let ids = map.vertex_ids();
    let vertex_total = ids.iter().max().map_or(0, |m| m + 1);
    let predicted: Vec<Vec3> = (0..map.corners().len()).map(|h| pl.rotations[h / 5].apply(pl.locals[h / 5][h % 5])).collect();

    let mut sums = vec![[0.0; 3]; vertex_total];
    for (h, &v) in ids.iter().enumerate() {
        sums[v] = geom::add(sums[v], predicted[h]);
    }
    let vertices: Vec<Vec3> = sums.into_iter().map(geom::normalize).collect();
    let mut worst: f64 = 0.0;
    for (h, &v) in ids.iter().enumerate() {
        worst = worst.max(2.0 * geom::arc_length(predicted[h], vertices[v]));
    }
    if worst.is_nan() || worst > DIVERGENCE_LIMIT {
        return Err(RealizeError::Divergence(worst));
    }
    let faces = (0..map.face_count()).map(|f| core::array::from_fn(|k| ids[5 * f + k])).collect();
    let labels = (0..map.face_count()).map(|f| map.face_pattern(f)).collect();
    let isometries = pl
        .rotations
        .iter()
        .zip(&pl.mirrored)
        .map(|(q, &m)| if m { q.compose(&Isometry::MIRROR) } else { *q })
        .collect();
    Ok(RealizedTiling { vertices, faces, labels, isometries, max_closure_error: worst })
}

/// For each vertex, how far the composition of edge-to-edge transitions
/// once around it is from the identity.
pub fn holonomy(map: &HalfEdgeMap, p: &PentagonSpec) -> Result<Vec<f64>, RealizeError> {
    let pl = place(map, p)?;
    Ok(map
        .vertices()
        .iter()
        .map(|orbit| {
            let start = pl.rotations[orbit[0] / 5];
            let mut q = start;
            for &h in orbit {
                // From the face of h across its edge to the face of the
                // next half-edge in the rotation.
                q = across(map, &pl.locals, &q, h);
            }
            q.distance(&start)
        })
        .collect())
}

impl RealizedTiling {
    /// Measured angle sum minus `3π` for each face.
    #[must_use]
    pub fn face_excess(&self) -> Vec<f64> {
        self.faces
            .iter()
            .map(|f| {
                let s: f64 = (0..5)
                    .map(|k| geom::interior_angle(self.vertices[f[(k + 4) % 5]], self.vertices[f[k]], self.vertices[f[(k + 1) % 5]]))
                    .sum();
                s - 3.0 * PI
            })
            .collect()
    }

    #[must_use]
    pub fn total_area(&self) -> f64 {
        self.face_excess().iter().sum()
    }

    /// Largest difference between a measured edge and its labelled length.
    #[must_use]
    pub fn edge_length_error(&self, p: &PentagonSpec) -> f64 {
        let mut worst: f64 = 0.0;
        for (f, labels) in self.faces.iter().zip(&self.labels) {
            for k in 0..5 {
                let len = geom::arc_length(self.vertices[f[k]], self.vertices[f[(k + 1) % 5]]);
                let want = match labels[k].1 {
                    Edge::A => p.a.0,
                    Edge::B => p.b.0,
                };
                worst = worst.max(fabs(len - want));
            }
        }
        worst
    }

    /// Largest difference between a measured corner and its labelled angle.
    pub fn angle_error(&self, p: &PentagonSpec) -> Result<f64, RealizeError> {
        let values = p.values()?;
        let mut worst: f64 = 0.0;
        for (f, labels) in self.faces.iter().zip(&self.labels) {
            for k in 0..5 {
                let m = geom::interior_angle(self.vertices[f[(k + 4) % 5]], self.vertices[f[k]], self.vertices[f[(k + 1) % 5]]);
                worst = worst.max(fabs(m - values[labels[k].0.index()]));
            }
        }
        Ok(worst)
    }

    /// Largest deviation of a vertex from unit length.
    #[must_use]
    pub fn norm_error(&self) -> f64 {
        self.vertices.iter().map(|&v| fabs(geom::norm(v) - 1.0)).fold(0.0, f64::max)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn aligning_maps_points() {
        let l1 = geom::normalize([0.1, 0.2, 1.0]);
        let l2 = geom::normalize([0.3, -0.1, 1.0]);
        let q = Isometry([[0.0, -1.0, 0.0], [1.0, 0.0, 0.0], [0.0, 0.0, 1.0]]);
        let r = Isometry::aligning(l1, l2, q.apply(l1), q.apply(l2));
        assert!(r.distance(&q) < 1e-12);
        assert!(fabs(r.det() - 1.0) < 1e-12);
    }

    #[test]
    fn mirror_is_improper() {
        assert_eq!(Isometry::MIRROR.det(), -1.0);
        assert!(Isometry::MIRROR.orthogonality_error() < 1e-15);
    }
}
