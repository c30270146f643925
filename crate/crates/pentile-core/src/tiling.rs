//! Combinatorial tilings: half-edge maps, the builders for every tiling of
//! the classification, and structural verification.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;
use core::fmt;

use libm::{fabs, sqrt};
use num_rational::Rational64;
use thiserror::Error;

use crate::avc::{self, VertexType};
use crate::geom::{self, Vec3};
use crate::label::{match_pattern, Angle, Edge, MIRRORED_PATTERN, PATTERN};
use crate::pentagon::PentagonSpec;

/// Default tolerance for numeric vertex angle sums.
pub const VERIFY_TOL: f64 = 1e-8;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum TilingError {
    #[error("{0} corners do not split into pentagons")]
    NotPentagonal(usize),
    #[error("half-edge {0} has twin index out of range")]
    TwinOutOfRange(usize),
    #[error("twin links are not a fixed-point-free involution at half-edge {0}")]
    NotInvolution(usize),
    #[error("directed edge {0} -> {1} appears twice")]
    DuplicateEdge(usize, usize),
    #[error("edge {0} -> {1} has no opposite")]
    OpenEdge(usize, usize),
    #[error("region boundary is not a single cycle")]
    BadBoundary,
    #[error("no platonic solid with {0} triangles at a corner")]
    UnsupportedCorner(u32),
    #[error("{0} is not a tiling of family {1}")]
    WrongFamily(Variant, Family),
    #[error("unknown variant {0:?}")]
    UnknownVariant(String),
}

/// One corner of a face: the angle there, the label of the edge leaving it
/// counterclockwise, and the opposite half-edge of that edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Corner {
    pub angle: Angle,
    pub edge: Edge,
    pub twin: usize,
}

/// A closed oriented map whose faces are pentagons.
///
/// Half-edge `h` belongs to face `h / 5` and starts at corner `h % 5`;
/// corners run counterclockwise.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HalfEdgeMap {
    corners: Vec<Corner>,
}

impl HalfEdgeMap {
    pub fn from_corners(corners: Vec<Corner>) -> Result<Self, TilingError> {
        if corners.is_empty() || corners.len() % 5 != 0 {
            return Err(TilingError::NotPentagonal(corners.len()));
        }
        for (h, c) in corners.iter().enumerate() {
            let t = c.twin;
            if t >= corners.len() {
                return Err(TilingError::TwinOutOfRange(h));
            }
            if t == h || corners[t].twin != h {
                return Err(TilingError::NotInvolution(h));
            }
        }
        Ok(Self { corners })
    }

    /// Build from faces given as counterclockwise `(vertex id, angle, edge)`
    /// lists, pairing each directed edge with its reverse.
    pub fn from_polygons(faces: &[[(usize, Angle, Edge); 5]]) -> Result<Self, TilingError> {
        let mut directed: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for (f, face) in faces.iter().enumerate() {
            for k in 0..5 {
                let key = (face[k].0, face[(k + 1) % 5].0);
                if directed.insert(key, 5 * f + k).is_some() {
                    return Err(TilingError::DuplicateEdge(key.0, key.1));
                }
            }
        }
        let mut corners = Vec::with_capacity(5 * faces.len());
        for face in faces {
            for k in 0..5 {
                let (u, v) = (face[k].0, face[(k + 1) % 5].0);
                let twin = *directed.get(&(v, u)).ok_or(TilingError::OpenEdge(u, v))?;
                corners.push(Corner { angle: face[k].1, edge: face[k].2, twin });
            }
        }
        Self::from_corners(corners)
    }

    #[must_use]
    pub fn corners(&self) -> &[Corner] {
        &self.corners
    }

    #[must_use]
    pub fn corner(&self, h: usize) -> Corner {
        self.corners[h]
    }

    #[must_use]
    pub fn face_count(&self) -> usize {
        self.corners.len() / 5
    }

    #[must_use]
    pub fn edge_count(&self) -> usize {
        self.corners.len() / 2
    }

    #[must_use]
    pub fn twin(&self, h: usize) -> usize {
        self.corners[h].twin
    }

    #[must_use]
    pub fn next(&self, h: usize) -> usize {
        5 * (h / 5) + (h + 1) % 5
    }

    #[must_use]
    pub fn prev(&self, h: usize) -> usize {
        5 * (h / 5) + (h + 4) % 5
    }

    /// `(angle, following edge)` around a face.
    #[must_use]
    pub fn face_pattern(&self, f: usize) -> [(Angle, Edge); 5] {
        core::array::from_fn(|k| {
            let c = self.corners[5 * f + k];
            (c.angle, c.edge)
        })
    }

    /// Half-edges leaving each vertex, in rotation order. Vertices are
    /// numbered by their smallest half-edge.
    #[must_use]
    pub fn vertices(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.corners.len()];
        let mut out = Vec::new();
        for start in 0..self.corners.len() {
            if seen[start] {
                continue;
            }
            let mut orbit = Vec::new();
            let mut h = start;
            while !seen[h] {
                seen[h] = true;
                orbit.push(h);
                h = self.next(self.twin(h));
            }
            out.push(orbit);
        }
        out
    }

    /// Vertex index of the origin of every half-edge.
    #[must_use]
    pub fn vertex_ids(&self) -> Vec<usize> {
        let mut ids = vec![0; self.corners.len()];
        for (v, orbit) in self.vertices().iter().enumerate() {
            for &h in orbit {
                ids[h] = v;
            }
        }
        ids
    }

    /// The same tiling seen from the other side of the sphere.
    #[must_use]
    pub fn mirrored(&self) -> Self {
        // Old corner j of a face becomes corner (5 - j) % 5; the half-edge
        // j -> j+1 becomes the one leaving old corner j+1.
        let new_index = |h: usize| 5 * (h / 5) + (4 - h % 5) % 5;
        let mut corners = self.corners.clone();
        for f in 0..self.face_count() {
            for k in 0..5 {
                let old_corner = 5 * f + (5 - k) % 5;
                let old_edge = 5 * f + (4 + 5 - k) % 5;
                corners[5 * f + k] = Corner {
                    angle: self.corners[old_corner].angle,
                    edge: self.corners[old_edge].edge,
                    twin: new_index(self.corners[old_edge].twin),
                };
            }
        }
        Self { corners }
    }

    /// Renumber: new face `i` is old face `order[i]` with its corners
    /// rotated left by `shift[i]`.
    ///
    /// # Panics
    /// If `order` is not a permutation of the faces or lengths differ.
    #[must_use]
    pub fn permuted(&self, order: &[usize], shift: &[usize]) -> Self {
        let n = self.face_count();
        assert!(order.len() == n && shift.len() == n, "one entry per face");
        let mut position = vec![usize::MAX; self.corners.len()];
        for (i, &f) in order.iter().enumerate() {
            for k in 0..5 {
                position[5 * f + (k + shift[i]) % 5] = 5 * i + k;
            }
        }
        assert!(position.iter().all(|&p| p != usize::MAX), "order must be a permutation");
        let mut corners = self.corners.clone();
        for (old, &new) in position.iter().enumerate() {
            let c = self.corners[old];
            corners[new] = Corner { twin: position[c.twin], ..c };
        }
        Self { corners }
    }

    /// Fault injection: flip the length label on one side of an edge.
    #[must_use]
    pub fn with_edge_flipped(&self, h: usize) -> Self {
        let mut m = self.clone();
        m.corners[h].edge = m.corners[h].edge.flipped();
        m
    }

    /// Fault injection: exchange the angles at two corners of one face.
    #[must_use]
    pub fn with_angles_swapped(&self, face: usize, i: usize, j: usize) -> Self {
        let mut m = self.clone();
        let (x, y) = (5 * face + i, 5 * face + j);
        let t = m.corners[x].angle;
        m.corners[x].angle = m.corners[y].angle;
        m.corners[y].angle = t;
        m
    }

    /// Rename angles through `f`, keeping everything else.
    #[must_use]
    pub fn relabeled(&self, f: impl Fn(Angle) -> Angle) -> Self {
        let corners = self.corners.iter().map(|c| Corner { angle: f(c.angle), ..*c }).collect();
        Self { corners }
    }

    /// Breadth-first code from one half-edge; minimal over all starts it is
    /// a canonical form for the oriented labelled map.
    fn code_from(&self, start: usize, best: Option<&[u32]>) -> Option<Vec<u32>> {
        const UNSEEN: u32 = u32::MAX;
        let mut index = vec![UNSEEN; self.corners.len()];
        let mut order = Vec::with_capacity(self.corners.len());
        index[start] = 0;
        order.push(start);
        let mut code = Vec::with_capacity(4 * self.corners.len());
        let mut i = 0;
        let mut better = false;
        while i < order.len() {
            let h = order[i];
            let c = self.corners[h];
            let visit = |x: usize, index: &mut Vec<u32>, order: &mut Vec<usize>| {
                if index[x] == UNSEEN {
                    index[x] = order.len() as u32;
                    order.push(x);
                }
                index[x]
            };
            let n = visit(self.next(h), &mut index, &mut order);
            let t = visit(c.twin, &mut index, &mut order);
            for x in [c.angle as u32, c.edge as u32, n, t] {
                // Abandon as soon as this start cannot beat the best so far.
                if let (Some(b), false) = (best, better) {
                    let pos = code.len();
                    match x.cmp(&b[pos]) {
                        core::cmp::Ordering::Greater => return None,
                        core::cmp::Ordering::Less => better = true,
                        core::cmp::Ordering::Equal => {}
                    }
                }
                code.push(x);
            }
            i += 1;
        }
        Some(code)
    }

    /// Canonical code over all starting half-edges of the map and of its
    /// mirror image.
    #[must_use]
    pub fn canonical_form(&self) -> Vec<u32> {
        let mirror = self.mirrored();
        let mut best: Option<Vec<u32>> = None;
        for m in [self, &mirror] {
            for h in 0..m.corners.len() {
                if let Some(code) = m.code_from(h, best.as_deref()) {
                    if best.as_ref().map_or(true, |b| code < *b) {
                        best = Some(code);
                    }
                }
            }
        }
        best.unwrap_or_default()
    }
}

/// Label-preserving isomorphism, allowing reflection.
#[must_use]
pub fn isomorphic(m1: &HalfEdgeMap, m2: &HalfEdgeMap) -> bool {
    m1.corners.len() == m2.corners.len() && census(m1) == census(m2) && m1.canonical_form() == m2.canonical_form()
}

/// Vertex-type counts of a tiling.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Census {
    pub counts: BTreeMap<VertexType, u32>,
}

impl Census {
    #[must_use]
    pub fn vertex_count(&self) -> u32 {
        self.counts.values().sum()
    }

    #[must_use]
    pub fn degree_sum(&self) -> u32 {
        self.counts.iter().map(|(v, n)| v.degree() * n).sum()
    }

    /// Number of vertices of each degree.
    #[must_use]
    pub fn by_degree(&self) -> BTreeMap<u32, u32> {
        let mut out = BTreeMap::new();
        for (v, n) in &self.counts {
            *out.entry(v.degree()).or_insert(0) += n;
        }
        out
    }

    /// Vertices of degree above three.
    pub fn high_degree(&self) -> impl Iterator<Item = (&VertexType, &u32)> {
        self.counts.iter().filter(|(v, _)| v.degree() > 3)
    }

    /// e.g. `T(4βγε²,2ε⁴)`.
    #[must_use]
    pub fn t_notation(&self) -> String {
        let parts: Vec<String> = self.high_degree().map(|(v, n)| format!("{n}{v}")).collect();
        format!("T({})", parts.join(","))
    }

    /// e.g. `T4bge2_2e4`.
    #[must_use]
    pub fn variant_name(&self) -> String {
        let parts: Vec<String> = self.high_degree().map(|(v, n)| format!("{n}{}", v.ascii())).collect();
        format!("T{}", parts.join("_"))
    }
}

#[must_use]
pub fn census(map: &HalfEdgeMap) -> Census {
    let mut counts = BTreeMap::new();
    for orbit in map.vertices() {
        let angles: Vec<Angle> = orbit.iter().map(|&h| map.corner(h).angle).collect();
        *counts.entry(VertexType::from_angles(&angles)).or_insert(0) += 1;
    }
    Census { counts }
}

/// Platonic solids whose faces are triangles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Platonic {
    Tetrahedron,
    Octahedron,
    Icosahedron,
}

impl Platonic {
    pub fn from_corner_degree(n: u32) -> Result<Self, TilingError> {
        match n {
            3 => Ok(Self::Tetrahedron),
            4 => Ok(Self::Octahedron),
            5 => Ok(Self::Icosahedron),
            _ => Err(TilingError::UnsupportedCorner(n)),
        }
    }

    #[must_use]
    pub fn vertices(self) -> Vec<Vec3> {
        let raw: Vec<Vec3> = match self {
            Self::Tetrahedron => vec![[1.0, 1.0, 1.0], [1.0, -1.0, -1.0], [-1.0, 1.0, -1.0], [-1.0, -1.0, 1.0]],
            Self::Octahedron => vec![
                [1.0, 0.0, 0.0],
                [-1.0, 0.0, 0.0],
                [0.0, 1.0, 0.0],
                [0.0, -1.0, 0.0],
                [0.0, 0.0, 1.0],
                [0.0, 0.0, -1.0],
            ],
            Self::Icosahedron => {
                let t = (1.0 + sqrt(5.0)) / 2.0;
                vec![
                    [-1.0, t, 0.0],
                    [1.0, t, 0.0],
                    [-1.0, -t, 0.0],
                    [1.0, -t, 0.0],
                    [0.0, -1.0, t],
                    [0.0, 1.0, t],
                    [0.0, -1.0, -t],
                    [0.0, 1.0, -t],
                    [t, 0.0, -1.0],
                    [t, 0.0, 1.0],
                    [-t, 0.0, -1.0],
                    [-t, 0.0, 1.0],
                ]
            }
        };
        raw.into_iter().map(geom::normalize).collect()
    }

    /// Faces as counterclockwise corner triples seen from outside.
    #[must_use]
    pub fn triangles(self) -> Vec<[usize; 3]> {
        let v = self.vertices();
        let n = v.len();
        let edge_dot = (0..n).skip(1).map(|j| geom::dot(v[0], v[j])).fold(f64::MIN, f64::max);
        let adjacent = |i: usize, j: usize| fabs(geom::dot(v[i], v[j]) - edge_dot) < 1e-9;
        let mut out = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    if adjacent(a, b) && adjacent(b, c) && adjacent(a, c) {
                        let normal = geom::cross(geom::sub(v[b], v[a]), geom::sub(v[c], v[a]));
                        out.push(if geom::dot(normal, v[a]) < 0.0 { [a, c, b] } else { [a, b, c] });
                    }
                }
            }
        }
        out
    }
}

/// Orientation of the three pentagons inside one triangle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Hand {
    /// Spokes from the centre reach the first point of each side,
    /// counting counterclockwise.
    Ccw,
    Cw,
}

impl Hand {
    #[must_use]
    pub const fn flipped(self) -> Self {
        match self {
            Hand::Ccw => Hand::Cw,
            Hand::Cw => Hand::Ccw,
        }
    }
}

/// One triangle split into three pentagons. `ring` lists the nine boundary
/// points counterclockwise: a triangle corner at 0, 3, 6 and two side
/// points after each corner.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Cell {
    pub hand: Hand,
    pub ring: [usize; 9],
}

/// A platonic triangle complex with each triangle subdivided, and the cap
/// operations that turn the plain subdivision into the other tilings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitComplex {
    pub platonic: Platonic,
    pub triangles: Vec<[usize; 3]>,
    pub cells: Vec<Cell>,
    point_count: usize,
}

impl UnitComplex {
    /// The pentagonal subdivision, all cells counterclockwise.
    #[must_use]
    pub fn new(platonic: Platonic) -> Self {
        let triangles = platonic.triangles();
        let nv = platonic.vertices().len();
        let mut side: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        let mut point = |x: usize, y: usize| {
            let next = nv + side.len();
            *side.entry((x, y)).or_insert(next)
        };
        let cells = triangles
            .iter()
            .map(|t| {
                let mut ring = [0; 9];
                for k in 0..3 {
                    let (x, y) = (t[k], t[(k + 1) % 3]);
                    ring[3 * k] = x;
                    ring[3 * k + 1] = point(x, y);
                    ring[3 * k + 2] = point(y, x);
                }
                Cell { hand: Hand::Ccw, ring }
            })
            .collect();
        let point_count = nv + side.len();
        Self { platonic, triangles, cells, point_count }
    }

    /// Cells of the triangles around platonic vertex `v`.
    #[must_use]
    pub fn cap(&self, v: usize) -> Vec<usize> {
        (0..self.triangles.len()).filter(|&i| self.triangles[i].contains(&v)).collect()
    }

    /// Boundary points of a region of cells, counterclockwise around the
    /// region, starting from the smallest point id.
    pub fn boundary_cycle(&self, region: &[usize]) -> Result<Vec<usize>, TilingError> {
        let inner: BTreeSet<(usize, usize)> =
            region.iter().flat_map(|&i| (0..9).map(move |k| (self.cells[i].ring[k], self.cells[i].ring[(k + 1) % 9]))).collect();
        let mut next: BTreeMap<usize, usize> = BTreeMap::new();
        for &(x, y) in &inner {
            if !inner.contains(&(y, x)) && next.insert(x, y).is_some() {
                return Err(TilingError::BadBoundary);
            }
        }
        let (&start, _) = next.iter().next().ok_or(TilingError::BadBoundary)?;
        let mut cycle = vec![start];
        loop {
            let y = next[cycle.last().expect("nonempty")];
            if y == start {
                break;
            }
            if cycle.len() > next.len() {
                return Err(TilingError::BadBoundary);
            }
            cycle.push(y);
        }
        if cycle.len() != next.len() {
            return Err(TilingError::BadBoundary);
        }
        Ok(cycle)
    }

    /// Cut out a region and glue it back reflected: boundary point `qᵢ`
    /// goes to `q₍c−i₎` and every cell in it changes hand.
    pub fn reverse_region(&mut self, region: &[usize], offset: usize) -> Result<(), TilingError> {
        let q = self.boundary_cycle(region)?;
        let l = q.len();
        let map: BTreeMap<usize, usize> = (0..l).map(|i| (q[i], q[(offset + l - i % l) % l])).collect();
        for &i in region {
            let cell = &mut self.cells[i];
            let old = cell.ring;
            for k in 0..9 {
                let p = old[(9 - k) % 9];
                cell.ring[k] = *map.get(&p).unwrap_or(&p);
            }
            cell.hand = cell.hand.flipped();
        }
        Ok(())
    }

    /// Cut out a region and glue it back rotated by `offset` boundary steps.
    pub fn twist_region(&mut self, region: &[usize], offset: usize) -> Result<(), TilingError> {
        let q = self.boundary_cycle(region)?;
        let l = q.len();
        let map: BTreeMap<usize, usize> = (0..l).map(|i| (q[i], q[(i + offset) % l])).collect();
        for &i in region {
            for p in &mut self.cells[i].ring {
                *p = *map.get(p).unwrap_or(p);
            }
        }
        Ok(())
    }

    pub fn reverse_cap(&mut self, v: usize, offset: usize) -> Result<(), TilingError> {
        self.reverse_region(&self.cap(v), offset)
    }

    pub fn twist_cap(&mut self, v: usize, offset: usize) -> Result<(), TilingError> {
        self.twist_region(&self.cap(v), offset)
    }

    /// Three pentagons per cell. The centre of cell `i` gets a fresh id.
    #[must_use]
    pub fn pentagons(&self) -> Vec<[(usize, Angle, Edge); 5]> {
        let mut out = Vec::with_capacity(3 * self.cells.len());
        for (i, cell) in self.cells.iter().enumerate() {
            let centre = self.point_count + i;
            let p = |k: usize| cell.ring[k % 9];
            for k in 0..3 {
                let (ids, labels) = match cell.hand {
                    Hand::Ccw => ([centre, p(3 * k + 1), p(3 * k + 2), p(3 * k + 3), p(3 * k + 4)], PATTERN),
                    Hand::Cw => ([centre, p(3 * k + 2), p(3 * k + 3), p(3 * k + 4), p(3 * k + 5)], MIRRORED_PATTERN),
                };
                out.push(core::array::from_fn(|j| (ids[j], labels[j].0, labels[j].1)));
            }
        }
        out
    }

    pub fn to_map(&self) -> Result<HalfEdgeMap, TilingError> {
        HalfEdgeMap::from_polygons(&self.pentagons())
    }
}

/// The pentagonal subdivision of the tetrahedron (`n = 3`), octahedron
/// (`n = 4`) or icosahedron (`n = 5`).
pub fn build_pentagonal_subdivision(n: u32) -> Result<HalfEdgeMap, TilingError> {
    UnitComplex::new(Platonic::from_corner_degree(n)?).to_map()
}

/// The two families of tilings: vertices `α³, βγδ, δε²` or `α³, βγδ, δ²ε`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    One,
    Two,
}

impl Family {
    pub const ALL: [Family; 2] = [Family::One, Family::Two];

    #[must_use]
    pub const fn number(self) -> u32 {
        match self {
            Family::One => 1,
            Family::Two => 2,
        }
    }

    #[must_use]
    pub fn from_number(n: u32) -> Option<Self> {
        match n {
            1 => Some(Family::One),
            2 => Some(Family::Two),
            _ => None,
        }
    }

    /// Boundary shift used when a cap is glued back. Any shift congruent
    /// to this modulo 3 gives the same tiling.
    #[must_use]
    pub const fn gluing_offset(self) -> usize {
        match self {
            Family::One => 1,
            Family::Two => 2,
        }
    }

    #[must_use]
    pub const fn variants(self) -> &'static [Variant] {
        use Variant::*;
        match self {
            Family::One => &[T6e4, T4bge2_2e4, T4b2g2_2e4, T12e5, T5bge3_7e5, T10bge3_2e5, T2b2g2e_6bge3_4e5, T6b2g2e_3bge3_3e5],
            Family::Two => &[T6e4, T12e5, T5bge2_5de3_7e5, T10bge2_10de3_2e5, T10bge2_6de3_4e5, T15bge2_3de3_3e5],
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.number())
    }
}

/// Tilings named by their vertices of degree above three, with `b, g, d, e`
/// standing for `β, γ, δ, ε`.
#[allow(non_camel_case_types)]
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    T6e4,
    T4bge2_2e4,
    T4b2g2_2e4,
    T12e5,
    T5bge3_7e5,
    T10bge3_2e5,
    T2b2g2e_6bge3_4e5,
    T6b2g2e_3bge3_3e5,
    T5bge2_5de3_7e5,
    T10bge2_10de3_2e5,
    T10bge2_6de3_4e5,
    T15bge2_3de3_3e5,
}

/// Which caps are cut out and how they are glued back.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Recipe {
    Plain,
    Reverse(Caps),
    Twist,
}

/// Sets of platonic vertices whose caps are modified.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Caps {
    One,
    Antipodal,
    /// Two corners joined by a path of two platonic edges.
    DistanceTwo,
    /// Three corners pairwise at distance two.
    Three,
}

impl Variant {
    pub const ALL: [Variant; 12] = [
        Variant::T6e4,
        Variant::T4bge2_2e4,
        Variant::T4b2g2_2e4,
        Variant::T12e5,
        Variant::T5bge3_7e5,
        Variant::T10bge3_2e5,
        Variant::T2b2g2e_6bge3_4e5,
        Variant::T6b2g2e_3bge3_3e5,
        Variant::T5bge2_5de3_7e5,
        Variant::T10bge2_10de3_2e5,
        Variant::T10bge2_6de3_4e5,
        Variant::T15bge2_3de3_3e5,
    ];

    #[must_use]
    pub const fn name(self) -> &'static str {
        match self {
            Variant::T6e4 => "T6e4",
            Variant::T4bge2_2e4 => "T4bge2_2e4",
            Variant::T4b2g2_2e4 => "T4b2g2_2e4",
            Variant::T12e5 => "T12e5",
            Variant::T5bge3_7e5 => "T5bge3_7e5",
            Variant::T10bge3_2e5 => "T10bge3_2e5",
            Variant::T2b2g2e_6bge3_4e5 => "T2b2g2e_6bge3_4e5",
            Variant::T6b2g2e_3bge3_3e5 => "T6b2g2e_3bge3_3e5",
            Variant::T5bge2_5de3_7e5 => "T5bge2_5de3_7e5",
            Variant::T10bge2_10de3_2e5 => "T10bge2_10de3_2e5",
            Variant::T10bge2_6de3_4e5 => "T10bge2_6de3_4e5",
            Variant::T15bge2_3de3_3e5 => "T15bge2_3de3_3e5",
        }
    }

    pub fn from_name(s: &str) -> Result<Self, TilingError> {
        Variant::ALL.into_iter().find(|v| v.name().eq_ignore_ascii_case(s)).ok_or_else(|| TilingError::UnknownVariant(s.into()))
    }

    /// Families containing this tiling.
    pub fn families(self) -> impl Iterator<Item = Family> {
        Family::ALL.into_iter().filter(move |f| f.variants().contains(&self))
    }

    #[must_use]
    pub fn face_count(self) -> usize {
        match self.platonic() {
            Platonic::Tetrahedron => 12,
            Platonic::Octahedron => 24,
            Platonic::Icosahedron => 60,
        }
    }

    fn platonic(self) -> Platonic {
        match self {
            Variant::T6e4 | Variant::T4bge2_2e4 | Variant::T4b2g2_2e4 => Platonic::Octahedron,
            _ => Platonic::Icosahedron,
        }
    }

    fn recipe(self) -> Recipe {
        use Variant::*;
        match self {
            T6e4 | T12e5 => Recipe::Plain,
            T4b2g2_2e4 => Recipe::Twist,
            T4bge2_2e4 | T5bge3_7e5 | T5bge2_5de3_7e5 => Recipe::Reverse(Caps::One),
            T10bge3_2e5 | T10bge2_10de3_2e5 => Recipe::Reverse(Caps::Antipodal),
            T2b2g2e_6bge3_4e5 | T10bge2_6de3_4e5 => Recipe::Reverse(Caps::DistanceTwo),
            T6b2g2e_3bge3_3e5 | T15bge2_3de3_3e5 => Recipe::Reverse(Caps::Three),
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn cap_vertices(platonic: Platonic, caps: Caps) -> Vec<usize> {
    let v = platonic.vertices();
    let at = |i: usize, j: usize, d: f64| fabs(geom::dot(v[i], v[j]) - d) < 1e-9;
    let far = -1.0 / sqrt(5.0);
    let first = |pred: &dyn Fn(usize) -> bool| (0..v.len()).find(|&j| pred(j)).expect("platonic vertex exists");
    match caps {
        Caps::One => vec![0],
        Caps::Antipodal => vec![0, first(&|j| at(0, j, -1.0))],
        Caps::DistanceTwo => vec![0, first(&|j| at(0, j, far))],
        Caps::Three => {
            let w = first(&|j| at(0, j, far));
            vec![0, w, first(&|j| at(0, j, far) && at(w, j, far))]
        }
    }
}

/// Build a variant with an explicit gluing offset. Offsets other than the
/// family's give broken tilings, which is useful for testing the verifier.
pub fn build_with_offset(variant: Variant, offset: usize) -> Result<HalfEdgeMap, TilingError> {
    let platonic = variant.platonic();
    let mut complex = UnitComplex::new(platonic);
    match variant.recipe() {
        Recipe::Plain => {}
        Recipe::Twist => complex.twist_cap(0, offset)?,
        Recipe::Reverse(caps) => {
            for v in cap_vertices(platonic, caps) {
                complex.reverse_cap(v, offset)?;
            }
        }
    }
    complex.to_map()
}

pub fn build_tiling(family: Family, variant: Variant) -> Result<HalfEdgeMap, TilingError> {
    if !family.variants().contains(&variant) {
        return Err(TilingError::WrongFamily(variant, family));
    }
    build_with_offset(variant, family.gluing_offset())
}

pub fn build_family1_tiling(variant: Variant) -> Result<HalfEdgeMap, TilingError> {
    build_tiling(Family::One, variant)
}

pub fn build_family2_tiling(variant: Variant) -> Result<HalfEdgeMap, TilingError> {
    build_tiling(Family::Two, variant)
}

/// One line of a verification report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<Check>,
    pub census: Census,
}

impl Report {
    #[must_use]
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    #[must_use]
    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{:<12} {}  {}", c.name, if c.passed { "ok  " } else { "FAIL" }, c.detail)?;
        }
        write!(f, "census       {}", self.census.t_notation())
    }
}

fn check(name: &'static str, failures: &[String], ok_detail: String) -> Check {
    match failures.first() {
        None => Check { name, passed: true, detail: ok_detail },
        Some(first) => Check { name, passed: false, detail: format!("{} problem(s), first: {first}", failures.len()) },
    }
}

#[must_use]
pub fn verify(map: &HalfEdgeMap, p: &PentagonSpec) -> Report {
    verify_with_tol(map, p, VERIFY_TOL)
}

/// Structural and angle checks of `map` as a tiling by `p`. Failures are
/// report entries.
#[must_use]
pub fn verify_with_tol(map: &HalfEdgeMap, p: &PentagonSpec, tol: f64) -> Report {
    let f = map.face_count();
    let mut checks = Vec::new();

    let bad_twins: Vec<String> = (0..map.corners().len())
        .filter(|&h| map.corner(h).edge != map.corner(map.twin(h)).edge)
        .map(|h| format!("half-edge {h} is {} but its twin is {}", map.corner(h).edge, map.corner(map.twin(h)).edge))
        .collect();
    checks.push(check("twins", &bad_twins, format!("{} edges", map.edge_count())));

    let bad_faces: Vec<String> =
        (0..f).filter(|&i| match_pattern(&map.face_pattern(i)).is_none()).map(|i| format!("face {i}")).collect();
    checks.push(check("pattern", &bad_faces, format!("{f} faces")));

    let vertices = map.vertices();
    let types: Vec<VertexType> =
        vertices.iter().map(|o| VertexType::from_angles(&o.iter().map(|&h| map.corner(h).angle).collect::<Vec<_>>())).collect();

    let low: Vec<String> =
        types.iter().enumerate().filter(|(_, t)| t.degree() < 3).map(|(v, t)| format!("vertex {v} is {t}")).collect();
    checks.push(check("degree", &low, String::from("all at least 3")));

    let sums = vertex_sum_failures(&types, p, tol);
    checks.push(match sums {
        Ok(bad) => check("vertex sums", &bad, format!("{} vertices", types.len())),
        Err(e) => Check { name: "vertex sums", passed: false, detail: e },
    });

    let odd: Vec<String> =
        types.iter().enumerate().filter(|(_, t)| !t.parity_ok()).map(|(v, t)| format!("vertex {v} is {t}")).collect();
    checks.push(check("parity", &odd, String::from("even")));

    let (v, e) = (vertices.len() as i64, map.edge_count() as i64);
    let euler = v - e + f as i64;
    let euler_bad = if euler == 2 && 2 * e == 5 * f as i64 { vec![] } else { vec![format!("V - E + F = {euler}")] };
    checks.push(check("euler", &euler_bad, format!("V={v} E={e} F={f}")));

    let face_bad = match p.f {
        Some(pf) if pf as usize != f => vec![format!("pentagon is for f={pf}, map has {f} faces")],
        _ => vec![],
    };
    checks.push(check("face count", &face_bad, format!("f={f}")));

    let c = census(map);
    let balanced = avc::check_balance(&c.counts, f as u32);
    checks.push(Check {
        name: "balance",
        passed: balanced,
        detail: if balanced { format!("each angle {f} times") } else { String::from("angle totals differ from f") },
    });

    Report { checks, census: c }
}

fn vertex_sum_failures(types: &[VertexType], p: &PentagonSpec, tol: f64) -> Result<Vec<String>, String> {
    // Exact when every angle has a linear form and f is known.
    let exact: Option<[Rational64; 5]> = p.f.and_then(|f| {
        let mut out = [Rational64::new(0, 1); 5];
        for a in Angle::ALL {
            out[a.index()] = p.angle(a).linear?.at(f);
        }
        Some(out)
    });
    if let Some(q) = exact {
        let two = Rational64::new(2, 1);
        return Ok(types
            .iter()
            .enumerate()
            .filter(|(_, t)| t.0.iter().zip(&q).map(|(&n, &x)| x * i64::from(n)).sum::<Rational64>() != two)
            .map(|(v, t)| format!("vertex {v} ({t}) sums to {}π", t.0.iter().zip(&q).map(|(&n, &x)| x * i64::from(n)).sum::<Rational64>()))
            .collect());
    }
    let values = p.values().map_err(|e| format!("{e}"))?;
    Ok(types
        .iter()
        .enumerate()
        .filter(|(_, t)| fabs(t.angle_sum(&values) - 2.0 * PI) > tol)
        .map(|(v, t)| format!("vertex {v} ({t}) sums to {:.6}π", t.angle_sum(&values) / PI))
        .collect())
}
