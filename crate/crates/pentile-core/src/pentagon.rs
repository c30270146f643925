//! The concrete `a³b²` pentagons and the one-parameter families they sit in.

use alloc::vec::Vec;
use core::f64::consts::PI;
use core::fmt;

use libm::{acos, cos, fabs, sqrt};
use num_rational::Rational64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::geom::{self, Vec3, NORTH};
use crate::label::Angle;
use crate::sphtrig::{self, Radians, SphtrigError};

/// Tolerance for identities that hold exactly in exact arithmetic.
pub const IDENTITY_TOL: f64 = 1e-10;

#[derive(Clone, Debug, PartialEq, Error)]
pub enum PentagonError {
    #[error("no pentagon is defined for f = {0}")]
    UnsupportedFaceCount(u32),
    #[error("no platonic triangle complex with {0} triangles at a corner")]
    UnsupportedCorner(u32),
    #[error("no geometrically suitable root for delta = {delta}")]
    NoGeometricRoot { delta: f64 },
    #[error("{count} geometrically suitable roots, expected exactly one")]
    AmbiguousRoot { count: usize },
    #[error("infeasible parameter: {0}")]
    Infeasible(&'static str),
    #[error(transparent)]
    Sphtrig(#[from] SphtrigError),
    #[error("angle {0} has no numeric value")]
    MissingNumeric(Angle),
    #[error("beta-gamma order ({bg:?}) contradicts delta-epsilon order ({de:?})")]
    OrderingViolation { bg: core::cmp::Ordering, de: core::cmp::Ordering },
    #[error("no simple polygon after {0} attempts")]
    RetryExhausted(u32),
}

/// `(q + r/f)·π`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Linear {
    pub q: Rational64,
    pub r: Rational64,
}

impl Linear {
    #[must_use]
    pub fn new(q: (i64, i64), r: (i64, i64)) -> Self {
        Self { q: Rational64::new(q.0, q.1), r: Rational64::new(r.0, r.1) }
    }

    #[must_use]
    pub fn constant(q: (i64, i64)) -> Self {
        Self::new(q, (0, 1))
    }

    /// Coefficient of π once `f` is fixed.
    #[must_use]
    pub fn at(&self, f: u32) -> Rational64 {
        self.q + self.r / i64::from(f)
    }

    #[must_use]
    pub fn radians(&self, f: u32) -> f64 {
        ratio_f64(self.at(f)) * PI
    }
}

impl core::ops::Add for Linear {
    type Output = Linear;
    fn add(self, o: Linear) -> Linear {
        Linear { q: self.q + o.q, r: self.r + o.r }
    }
}

impl core::ops::Mul<i64> for Linear {
    type Output = Linear;
    fn mul(self, k: i64) -> Linear {
        Linear { q: self.q * k, r: self.r * k }
    }
}

impl fmt::Display for Linear {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let zero = Rational64::new(0, 1);
        match (self.q == zero, self.r == zero) {
            (_, true) => write!(f, "({})π", self.q),
            (true, false) => write!(f, "({}/f)π", self.r),
            (false, false) if self.r < zero => write!(f, "({} - {}/f)π", self.q, -self.r),
            (false, false) => write!(f, "({} + {}/f)π", self.q, self.r),
        }
    }
}

pub(crate) fn ratio_f64(x: Rational64) -> f64 {
    *x.numer() as f64 / *x.denom() as f64
}

/// An angle known as an exact linear form, as a number, or both.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct AngleForm {
    pub linear: Option<Linear>,
    pub numeric: Option<f64>,
}

impl AngleForm {
    #[must_use]
    pub fn numeric(x: f64) -> Self {
        Self { linear: None, numeric: Some(x) }
    }

    #[must_use]
    pub fn exact(l: Linear) -> Self {
        Self { linear: Some(l), numeric: None }
    }

    /// Both the form and its value at `f`.
    #[must_use]
    pub fn resolved(l: Linear, f: u32) -> Self {
        Self { linear: Some(l), numeric: Some(l.radians(f)) }
    }

    /// The numeric value, or the form evaluated at `f`.
    #[must_use]
    pub fn value(&self, f: Option<u32>) -> Option<f64> {
        self.numeric.or_else(|| Some(self.linear?.radians(f?)))
    }
}

/// The five angles and two edge lengths of a pentagon.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PentagonSpec {
    pub f: Option<u32>,
    pub alpha: AngleForm,
    pub beta: AngleForm,
    pub gamma: AngleForm,
    pub delta: AngleForm,
    pub epsilon: AngleForm,
    pub a: Radians,
    pub b: Radians,
}

impl PentagonSpec {
    #[must_use]
    pub fn angle(&self, x: Angle) -> &AngleForm {
        match x {
            Angle::Alpha => &self.alpha,
            Angle::Beta => &self.beta,
            Angle::Gamma => &self.gamma,
            Angle::Delta => &self.delta,
            Angle::Epsilon => &self.epsilon,
        }
    }

    pub fn value(&self, x: Angle) -> Result<f64, PentagonError> {
        self.angle(x).value(self.f).ok_or(PentagonError::MissingNumeric(x))
    }

    /// Numeric angles indexed by [`Angle::index`].
    pub fn values(&self) -> Result<[f64; 5], PentagonError> {
        let mut out = [0.0; 5];
        for x in Angle::ALL {
            out[x.index()] = self.value(x)?;
        }
        Ok(out)
    }

    /// `Σ angles − (3 + 4/f)π`; zero for a pentagon that tiles with `f` tiles.
    pub fn angle_sum_residual(&self) -> Result<f64, PentagonError> {
        let f = self.f.ok_or(PentagonError::Infeasible("face count unset"))?;
        let s: f64 = self.values()?.iter().sum();
        Ok(s - (3.0 + 4.0 / f64::from(f)) * PI)
    }

    /// The same pentagon with the reflected naming: `β↔γ`, `δ↔ε`.
    #[must_use]
    pub fn relabeled(&self) -> Self {
        Self { beta: self.gamma, gamma: self.beta, delta: self.epsilon, epsilon: self.delta, ..*self }
    }

    /// Corner positions from a walk starting at the north pole along the
    /// `x` meridian, in the order α, β, δ, ε, γ, together with the distance
    /// by which the walk misses its starting point.
    pub fn trace(&self) -> Result<([Vec3; 5], f64), PentagonError> {
        let v = self.values()?;
        let angles = [v[0], v[1], v[3], v[4], v[2]];
        let (a, b) = (self.a.0, self.b.0);
        let (pts, end) = geom::turtle(NORTH, [1.0, 0.0, 0.0], &angles, &[b, a, a, a, b]);
        Ok((pts, geom::arc_length(end, NORTH)))
    }
}

/// Which pair of edges of the general pentagonal subdivision tile coincide.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Reduction {
    /// Spokes from the triangle centre are `a`; `α = 2π/n` sits at the
    /// triangle corner and `ε = 2π/3` at the centre.
    CEqA,
    /// Spokes are `b`; `α = 2π/3` at the centre and `ε = 2π/n` at the corner.
    CEqB,
}

/// Tiles in the pentagonal subdivision of the platonic solid with `n`
/// triangles at each corner.
pub fn face_count(n: u32) -> Result<u32, PentagonError> {
    match n {
        3 => Ok(12),
        4 => Ok(24),
        5 => Ok(60),
        _ => Err(PentagonError::UnsupportedCorner(n)),
    }
}

/// `cos` of the side of a face triangle of the spherical tetrahedron,
/// octahedron or icosahedron.
pub fn platonic_side_cos(n: u32) -> Result<f64, PentagonError> {
    match n {
        3 => Ok(-1.0 / 3.0),
        4 => Ok(0.0),
        5 => Ok(1.0 / sqrt(5.0)),
        _ => Err(PentagonError::UnsupportedCorner(n)),
    }
}

/// `cos` of the distance from a face centre to a face corner.
pub fn platonic_circumradius_cos(n: u32) -> Result<f64, PentagonError> {
    match n {
        3 => Ok(1.0 / 3.0),
        4 => Ok(1.0 / sqrt(3.0)),
        5 => Ok(sqrt(10.0 + 2.0 * sqrt(5.0)) / (sqrt(3.0) * (5.0 - sqrt(5.0)))),
        _ => Err(PentagonError::UnsupportedCorner(n)),
    }
}

/// The pentagon of the `f`-tile tiling with vertices `α³, βγδ, δε²`.
pub fn solve_family1(f: u32) -> Result<PentagonSpec, PentagonError> {
    let (n, delta) = match f {
        24 => (4, PI),
        60 => (5, 6.0 * PI / 5.0),
        _ => return Err(PentagonError::UnsupportedFaceCount(f)),
    };
    let mut p = solve_subdivision_family(n, Reduction::CEqB, Radians(delta))?;
    p.alpha.linear = Some(Linear::constant((2, 3)));
    p.delta.linear = Some(Linear::new((4, 3), (-8, 1)));
    p.epsilon.linear = Some(Linear::new((1, 3), (4, 1)));
    Ok(p)
}

/// The pentagon of the `f`-tile tiling with vertices `α³, βγδ, δ²ε`.
pub fn solve_family2(f: u32) -> Result<PentagonSpec, PentagonError> {
    let (n, delta) = match f {
        24 => (4, 3.0 * PI / 4.0),
        60 => (5, 4.0 * PI / 5.0),
        _ => return Err(PentagonError::UnsupportedFaceCount(f)),
    };
    let mut p = solve_subdivision_family(n, Reduction::CEqB, Radians(delta))?;
    p.alpha.linear = Some(Linear::constant((2, 3)));
    p.delta.linear = Some(Linear::new((5, 6), (-2, 1)));
    p.epsilon.linear = Some(Linear::new((1, 3), (4, 1)));
    Ok(p)
}

/// The tile of a pentagonal subdivision with alternating chain angle `delta`.
pub fn solve_subdivision_family(n: u32, reduction: Reduction, delta: Radians) -> Result<PentagonSpec, PentagonError> {
    let f = face_count(n)?;
    if !(delta.0 > 0.0 && delta.0 < 2.0 * PI) {
        return Err(PentagonError::Infeasible("delta outside (0, 2π)"));
    }
    let corner = 2.0 * PI / f64::from(n);
    let centre = 2.0 * PI / 3.0;
    let (a, b, beta, gamma, alpha, epsilon) = match reduction {
        Reduction::CEqB => {
            let (a, b, beta, gamma) = solve_centre_alpha(n, delta)?;
            (a, b, beta, gamma, Linear::constant((2, 3)), Linear::constant((2, i64::from(n))))
        }
        Reduction::CEqA => {
            let (a, b, beta, gamma) = solve_corner_alpha(corner, centre, delta)?;
            (a, b, beta, gamma, Linear::constant((2, i64::from(n))), Linear::constant((2, 3)))
        }
    };
    let p = PentagonSpec {
        f: Some(f),
        alpha: AngleForm::resolved(alpha, f),
        beta: AngleForm::numeric(beta),
        gamma: AngleForm::numeric(gamma),
        delta: AngleForm::numeric(delta.0),
        epsilon: AngleForm::resolved(epsilon, f),
        a,
        b,
    };
    let (pts, miss) = p.trace()?;
    if miss > 1e-9 {
        return Err(PentagonError::Infeasible("pentagon does not close"));
    }
    if !geom::is_simple(&pts) {
        return Err(PentagonError::Infeasible("pentagon is not simple"));
    }
    if fabs(a.0 - b.0) < 1e-12 {
        return Err(PentagonError::Infeasible("a equals b"));
    }
    Ok(p)
}

// Chain of three a-edges along each triangle side; closed forms throughout.
fn solve_centre_alpha(n: u32, delta: Radians) -> Result<(Radians, Radians, f64, f64), PentagonError> {
    let cos_l = platonic_side_cos(n)?;
    let half = acos(cos_l) / 2.0;
    let roots: Vec<Radians> = sphtrig::solve_chain3_for_a(cos_l, delta)
        .into_iter()
        .filter(|a| {
            let c = a.cos();
            c > 0.0 && c < 1.0 && a.0 < half
        })
        .collect();
    let a = match roots.as_slice() {
        [] => return Err(PentagonError::NoGeometricRoot { delta: delta.0 }),
        [a] => *a,
        _ => return Err(PentagonError::AmbiguousRoot { count: roots.len() }),
    };
    let epsilon = Radians(2.0 * PI / f64::from(n));
    let alpha = Radians(2.0 * PI / 3.0);
    let b = sphtrig::solve_b_from_diagonal(alpha, sphtrig::diagonal_bc(a, delta, epsilon))?;
    if b.0 <= 1e-12 {
        return Err(PentagonError::Infeasible("b degenerates to zero"));
    }
    let ae = Radians(acos(platonic_circumradius_cos(n)?));
    let gamma = sphtrig::angle_from_three_sides(b, a, ae)?.0;
    let beta = 2.0 * PI - delta.0 - gamma;
    if beta <= 0.0 {
        return Err(PentagonError::Infeasible("beta is not positive"));
    }
    Ok((a, b, beta, gamma))
}

/// Pentagon `A, B, D, E, C` built from the chain `B–D–E–C` and the apex `A`
/// with `AB = AC = b` and angle `alpha`. `None` when no apex exists.
pub(crate) fn from_chain(a: f64, b: f64, delta: f64, epsilon: f64, alpha: f64) -> Option<[Vec3; 5]> {
    let (chain, _) = geom::turtle(NORTH, [1.0, 0.0, 0.0], &[0.0, delta, epsilon, 0.0], &[a, a, a, 0.0]);
    let [bp, d, e, c] = chain;
    let m = geom::normalize(geom::add(bp, c));
    let half = geom::arc_length(bp, c) / 2.0;
    let cm = cos(b) / cos(half);
    if !(cm.is_finite() && fabs(cm) <= 1.0) {
        return None;
    }
    let dist = acos(cm);
    let n = geom::normalize(geom::cross(bp, c));
    for s in [1.0, -1.0] {
        let apex = geom::advance(m, geom::scale(s, n), dist).0;
        if fabs(geom::interior_angle(c, apex, bp) - alpha) < 1e-7 {
            return Some([apex, bp, d, e, c]);
        }
    }
    None
}

fn corner_alpha_residual(a: f64, alpha: f64, epsilon: f64, delta: f64) -> Option<(f64, f64, f64, f64)> {
    let cos_bc = sphtrig::diagonal_bc(Radians(a), Radians(delta), Radians(epsilon));
    let b = sphtrig::solve_b_from_diagonal(Radians(alpha), cos_bc).ok()?.0;
    let p = from_chain(a, b, delta, epsilon, alpha)?;
    let beta = geom::interior_angle(p[0], p[1], p[2]);
    let gamma = geom::interior_angle(p[3], p[4], p[0]);
    Some((beta + gamma + delta - 2.0 * PI, b, beta, gamma))
}

// No closed form here: `a` is the root of the vertex condition β + γ + δ = 2π
// at the spoke ends, bracketed on a grid and refined by bisection.
fn solve_corner_alpha(alpha: f64, epsilon: f64, delta: Radians) -> Result<(Radians, Radians, f64, f64), PentagonError> {
    const STEPS: u32 = 2000;
    let d = delta.0;
    let g = |a: f64| corner_alpha_residual(a, alpha, epsilon, d);
    let mut roots = Vec::new();
    let mut prev: Option<(f64, f64)> = None;
    for i in 1..STEPS {
        let x = f64::from(i) * (PI / 2.0) / f64::from(STEPS);
        let cur = g(x).map(|r| (x, r.0));
        if let (Some((x0, g0)), Some((x1, g1))) = (prev, cur) {
            // Sign changes across a jump of the measured angles are not roots.
            if g0 * g1 <= 0.0 && fabs(g0 - g1) < 1.0 {
                let (mut lo, mut hi) = (x0, x1);
                for _ in 0..80 {
                    let mid = 0.5 * (lo + hi);
                    match g(mid) {
                        Some((gm, ..)) if (gm <= 0.0) == (g0 <= 0.0) => lo = mid,
                        Some(_) => hi = mid,
                        None => break,
                    }
                }
                roots.push(0.5 * (lo + hi));
            }
        }
        prev = cur;
    }
    roots.dedup_by(|x, y| fabs(*x - *y) < 1e-9);
    let suitable: Vec<(f64, f64, f64, f64)> = roots
        .into_iter()
        .filter_map(|a| g(a).map(|(_, b, beta, gamma)| (a, b, beta, gamma)))
        .filter(|&(a, b, ..)| b > 1e-12 && fabs(a - b) > 1e-12)
        .filter(|&(a, b, ..)| from_chain(a, b, d, epsilon, alpha).is_some_and(|p| geom::is_simple(&p)))
        .collect();
    match suitable.as_slice() {
        [] => Err(PentagonError::NoGeometricRoot { delta: d }),
        [(a, b, beta, gamma)] => Ok((Radians(*a), Radians(*b), *beta, *gamma)),
        _ => Err(PentagonError::AmbiguousRoot { count: suitable.len() }),
    }
}

/// Maximal runs of `delta` on a uniform grid of `samples` interior points of
/// `(0, 2π)` where [`solve_subdivision_family`] succeeds.
#[must_use]
pub fn feasible_delta_runs(n: u32, reduction: Reduction, samples: u32) -> Vec<(f64, f64)> {
    let mut runs: Vec<(f64, f64)> = Vec::new();
    let mut open = false;
    for i in 1..=samples {
        let d = 2.0 * PI * f64::from(i) / f64::from(samples + 1);
        let ok = solve_subdivision_family(n, reduction, Radians(d)).is_ok();
        match (ok, open) {
            (true, true) => runs.last_mut().expect("open run").1 = d,
            (true, false) => runs.push((d, d)),
            _ => {}
        }
        open = ok;
    }
    runs
}

/// One numeric separation between a computed angle and a rational multiple
/// of π that would have been needed for an extra vertex.
#[derive(Clone, Debug, PartialEq)]
pub struct Exclusion {
    pub case: &'static str,
    pub angle: Angle,
    pub computed: f64,
    pub excluded: f64,
}

impl Exclusion {
    #[must_use]
    pub fn gap(&self) -> f64 {
        fabs(self.computed - self.excluded)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExclusionReport {
    pub entries: Vec<Exclusion>,
    /// Real roots of the cubic in `cos a` for the swapped `f = 60` case.
    pub swapped_cubic_roots: Vec<f64>,
}

impl ExclusionReport {
    /// Whether every gap exceeds `tol` radians.
    #[must_use]
    pub fn all_separated(&self, tol: f64) -> bool {
        self.entries.iter().all(|e| e.gap() > tol)
    }
}

/// Recompute the five angles whose values rule out candidate vertices.
pub fn exclusion_checks() -> Result<ExclusionReport, PentagonError> {
    let f1_24 = solve_family1(24)?;
    let f1_60 = solve_family1(60)?;
    let f2_24 = solve_family2(24)?;
    let f2_60 = solve_family2(60)?;
    // α = 2π/3, β + γ + ε = 2π, δ = 2π/5: the subdivision tile with the
    // two a²-angles and the two ab-angles exchanged.
    let swapped = solve_subdivision_family(5, Reduction::CEqB, Radians(3.0 * PI / 5.0))?.relabeled();
    let cubic = sphtrig::chain3_cubic(1.0 / sqrt(5.0), Radians(3.0 * PI / 5.0));
    let entries = alloc::vec![
        Exclusion { case: "family 1, f = 24", angle: Angle::Beta, computed: f1_24.value(Angle::Beta)?, excluded: PI / 4.0 },
        Exclusion { case: "family 1, f = 60", angle: Angle::Gamma, computed: f1_60.value(Angle::Gamma)?, excluded: 3.0 * PI / 5.0 },
        Exclusion { case: "family 2, f = 24", angle: Angle::Gamma, computed: f2_24.value(Angle::Gamma)?, excluded: 3.0 * PI / 4.0 },
        Exclusion { case: "family 2, f = 60", angle: Angle::Gamma, computed: f2_60.value(Angle::Gamma)?, excluded: 4.0 * PI / 5.0 },
        Exclusion { case: "swapped, f = 60", angle: Angle::Beta, computed: swapped.value(Angle::Beta)?, excluded: 4.0 * PI / 5.0 },
    ];
    Ok(ExclusionReport { entries, swapped_cubic_roots: cubic.real_roots() })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SymmetryClass {
    Symmetric,
    BetaGreater,
    GammaGreater,
}

/// Compare `β` with `γ` and `δ` with `ε`; the two comparisons must point
/// in opposite directions or both be equalities.
pub fn classify_symmetry(p: &PentagonSpec) -> Result<SymmetryClass, PentagonError> {
    let v = p.values()?;
    let order = |x: f64, y: f64| {
        if fabs(x - y) <= IDENTITY_TOL {
            core::cmp::Ordering::Equal
        } else if x > y {
            core::cmp::Ordering::Greater
        } else {
            core::cmp::Ordering::Less
        }
    };
    use core::cmp::Ordering::{Equal, Greater, Less};
    let bg = order(v[Angle::Beta.index()], v[Angle::Gamma.index()]);
    let de = order(v[Angle::Delta.index()], v[Angle::Epsilon.index()]);
    match (bg, de) {
        (Equal, Equal) => Ok(SymmetryClass::Symmetric),
        (Greater, Less) => Ok(SymmetryClass::BetaGreater),
        (Less, Greater) => Ok(SymmetryClass::GammaGreater),
        _ => Err(PentagonError::OrderingViolation { bg, de }),
    }
}

/// A random simple pentagon `A, B, D, E, C` with `AB = AC = b` and
/// `BD = CE = a`; the fifth edge `DE` is whatever closes it.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SampledPentagon {
    /// Counterclockwise: A, B, D, E, C.
    pub corners: [Vec3; 5],
    /// Measured angles (`f` unset).
    pub spec: PentagonSpec,
}

/// A random simple quadrilateral `B, D, E, C` with `BD = CE = a`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SampledQuadrilateral {
    /// Counterclockwise: B, D, E, C.
    pub corners: [Vec3; 4],
    pub beta: f64,
    pub gamma: f64,
    pub delta: f64,
    pub epsilon: f64,
}

const MAX_ATTEMPTS: u32 = 10_000;
const EDGE_RANGE: (f64, f64) = (0.05, 2.5);
const ANGLE_MARGIN: f64 = 0.05;

fn random_angle(rng: &mut ChaCha8Rng) -> f64 {
    rng.gen_range(ANGLE_MARGIN..2.0 * PI - ANGLE_MARGIN)
}

/// Rejection-sample a simple pentagon from `seed`.
pub fn sample_simple_pentagon(seed: u64) -> Result<SampledPentagon, PentagonError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_ATTEMPTS {
        let a = rng.gen_range(EDGE_RANGE.0..EDGE_RANGE.1);
        let b = rng.gen_range(EDGE_RANGE.0..EDGE_RANGE.1);
        let (alpha, beta, gamma) = (random_angle(&mut rng), random_angle(&mut rng), random_angle(&mut rng));
        let x = [1.0, 0.0, 0.0];
        let bp = geom::advance(NORTH, x, b).0;
        let c = geom::advance(NORTH, geom::rotate_about(x, NORTH, alpha), b).0;
        let to_d = geom::rotate_about(geom::tangent_towards(bp, NORTH), bp, -beta);
        let d = geom::advance(bp, to_d, a).0;
        let to_e = geom::rotate_about(geom::tangent_towards(c, NORTH), c, gamma);
        let e = geom::advance(c, to_e, a).0;
        let corners = [NORTH, bp, d, e, c];
        if !geom::is_simple(&corners) || geom::arc_length(d, e) > PI - 1e-6 {
            continue;
        }
        let m = |k: usize| geom::interior_angle(corners[(k + 4) % 5], corners[k], corners[(k + 1) % 5]);
        let spec = PentagonSpec {
            f: None,
            alpha: AngleForm::numeric(m(0)),
            beta: AngleForm::numeric(m(1)),
            gamma: AngleForm::numeric(m(4)),
            delta: AngleForm::numeric(m(2)),
            epsilon: AngleForm::numeric(m(3)),
            a: Radians(a),
            b: Radians(b),
        };
        return Ok(SampledPentagon { corners, spec });
    }
    Err(PentagonError::RetryExhausted(MAX_ATTEMPTS))
}

/// Rejection-sample a simple quadrilateral from `seed`.
pub fn sample_simple_quadrilateral(seed: u64) -> Result<SampledQuadrilateral, PentagonError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_ATTEMPTS {
        let a = rng.gen_range(EDGE_RANGE.0..EDGE_RANGE.1);
        let base = rng.gen_range(EDGE_RANGE.0..EDGE_RANGE.1);
        let (beta, gamma) = (random_angle(&mut rng), random_angle(&mut rng));
        let bp = NORTH;
        let c = geom::advance(NORTH, [1.0, 0.0, 0.0], base).0;
        let to_d = geom::rotate_about(geom::tangent_towards(bp, c), bp, -beta);
        let d = geom::advance(bp, to_d, a).0;
        let to_e = geom::rotate_about(geom::tangent_towards(c, bp), c, gamma);
        let e = geom::advance(c, to_e, a).0;
        let corners = [bp, d, e, c];
        if !geom::is_simple(&corners) || geom::arc_length(d, e) > PI - 1e-6 {
            continue;
        }
        let m = |k: usize| geom::interior_angle(corners[(k + 3) % 4], corners[k], corners[(k + 1) % 4]);
        return Ok(SampledQuadrilateral { corners, beta: m(0), gamma: m(3), delta: m(1), epsilon: m(2) });
    }
    Err(PentagonError::RetryExhausted(MAX_ATTEMPTS))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn family1_f24_edges() {
        let p = solve_family1(24).unwrap();
        assert_relative_eq!(p.a.0, PI / 6.0, epsilon = 1e-12);
        assert_relative_eq!(p.b.cos(), (3.0 + sqrt(3.0)) / 6.0, epsilon = 1e-12);
    }

    #[test]
    fn symmetric_input() {
        let x = AngleForm::numeric(1.0);
        let p = PentagonSpec {
            f: None,
            alpha: x,
            beta: AngleForm::numeric(2.0),
            gamma: AngleForm::numeric(2.0),
            delta: AngleForm::numeric(1.5),
            epsilon: AngleForm::numeric(1.5),
            a: Radians(0.2),
            b: Radians(0.3),
        };
        assert_eq!(classify_symmetry(&p).unwrap(), SymmetryClass::Symmetric);
        let bad = PentagonSpec { delta: AngleForm::numeric(1.0), ..p };
        assert!(matches!(classify_symmetry(&bad), Err(PentagonError::OrderingViolation { .. })));
    }

    #[test]
    fn unsupported_inputs() {
        assert_eq!(solve_family1(36), Err(PentagonError::UnsupportedFaceCount(36)));
        assert_eq!(face_count(6), Err(PentagonError::UnsupportedCorner(6)));
    }

    #[test]
    fn linear_display() {
        assert_eq!(alloc::format!("{}", Linear::new((1, 3), (4, 1))), "(1/3 + 4/f)π");
        assert_eq!(alloc::format!("{}", Linear::constant((2, 3))), "(2/3)π");
        assert_eq!(alloc::format!("{}", Linear::new((5, 6), (-2, 1))), "(5/6 - 2/f)π");
    }
}
