//! Spherical trigonometry on the unit sphere.
//!
//! Law-of-cosines solvers, the closed forms for a chain of three equal arcs
//! and for the diagonal of an `a³b²` pentagon, and a real-root extractor for
//! the cubics in `cos a` that these produce.

use alloc::vec::Vec;
use core::f64::consts::PI;
use core::fmt;

use libm::{acos, cbrt, cos, fabs, sin, sqrt};
use thiserror::Error;

/// Arguments of `acos` within this distance of ±1 are clamped; anything
/// further out is reported as a domain error.
pub const CLAMP_WINDOW: f64 = 1e-12;

/// An angle or arc length in radians.
#[derive(Clone, Copy, Debug, Default, PartialEq, PartialOrd)]
pub struct Radians(pub f64);

impl Radians {
    /// `x·π` radians.
    #[must_use]
    pub fn from_pi(x: f64) -> Self {
        Self(x * PI)
    }

    #[must_use]
    pub fn get(self) -> f64 {
        self.0
    }

    /// The value as a multiple of π.
    #[must_use]
    pub fn in_pi(self) -> f64 {
        self.0 / PI
    }

    #[must_use]
    pub fn cos(self) -> f64 {
        cos(self.0)
    }

    #[must_use]
    pub fn sin(self) -> f64 {
        sin(self.0)
    }
}

impl fmt::Display for Radians {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:.6}π", self.in_pi())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Error)]
pub enum SphtrigError {
    #[error("{what}: cosine {value} is outside [-1, 1]")]
    Domain { what: &'static str, value: f64 },
    #[error("{what}: argument {value} is outside its admissible range")]
    Argument { what: &'static str, value: f64 },
}

/// `acos` that only clamps inside [`CLAMP_WINDOW`].
pub fn acos_checked(x: f64, what: &'static str) -> Result<f64, SphtrigError> {
    if !x.is_finite() || fabs(x) > 1.0 + CLAMP_WINDOW {
        return Err(SphtrigError::Domain { what, value: x });
    }
    Ok(acos(x.clamp(-1.0, 1.0)))
}

fn check_side(x: Radians, what: &'static str) -> Result<(), SphtrigError> {
    if x.0 > 0.0 && x.0 < PI {
        Ok(())
    } else {
        Err(SphtrigError::Argument { what, value: x.0 })
    }
}

/// Third side of a triangle from two sides and the included angle.
pub fn side_from_two_sides_angle(p: Radians, q: Radians, angle: Radians) -> Result<Radians, SphtrigError> {
    check_side(p, "side p")?;
    check_side(q, "side q")?;
    if !(angle.0 > 0.0 && angle.0 < 2.0 * PI) {
        return Err(SphtrigError::Argument { what: "included angle", value: angle.0 });
    }
    let c = p.cos() * q.cos() + p.sin() * q.sin() * angle.cos();
    acos_checked(c, "side_from_two_sides_angle").map(Radians)
}

/// Angle opposite side `c` in the triangle with sides `a`, `b`, `c`.
pub fn angle_from_three_sides(a: Radians, b: Radians, c: Radians) -> Result<Radians, SphtrigError> {
    check_side(a, "side a")?;
    check_side(b, "side b")?;
    let x = (c.cos() - a.cos() * b.cos()) / (a.sin() * b.sin());
    acos_checked(x, "angle_from_three_sides").map(Radians)
}

/// `cos l` for the end-to-end distance `l` of three arcs of length `a`
/// joined with angle `delta` at the two joints, alternately on either side.
#[must_use]
pub fn chain3_endpoint(a: Radians, delta: Radians) -> f64 {
    chain3_cubic(0.0, delta).eval(a.cos())
}

/// The cubic in `x = cos a` whose roots are the solutions of
/// `chain3_endpoint(a, delta) = cos_l`.
#[must_use]
pub fn chain3_cubic(cos_l: f64, delta: Radians) -> Cubic {
    let (cd, sd) = (delta.cos(), delta.sin());
    Cubic::new((1.0 - cd) * (1.0 - cd), sd * sd, 2.0 * cd - cd * cd, -sd * sd - cos_l)
}

/// All `a ∈ [0, π]` with `chain3_endpoint(a, delta) = cos_l`, ascending.
#[must_use]
pub fn solve_chain3_for_a(cos_l: f64, delta: Radians) -> Vec<Radians> {
    if cos_l.is_nan() || fabs(cos_l) > 1.0 + CLAMP_WINDOW {
        return Vec::new();
    }
    let cubic = chain3_cubic(cos_l, delta);
    let mut out: Vec<Radians> = cubic
        .real_roots()
        .into_iter()
        .filter(|x| fabs(*x) <= 1.0 + CLAMP_WINDOW)
        .map(|x| Radians(polish_chain_root(acos(x.clamp(-1.0, 1.0)), cos_l, delta)))
        .collect();
    out.sort_by(|x, y| x.0.total_cmp(&y.0));
    out
}

// Newton in `a` directly, so the residual is small in the quantity the
// caller checks rather than in `cos a`.
fn polish_chain_root(mut a: f64, cos_l: f64, delta: Radians) -> f64 {
    let cubic = chain3_cubic(cos_l, delta);
    for _ in 0..8 {
        let x = cos(a);
        let r = cubic.eval(x);
        let d = -cubic.derivative(x) * sin(a);
        if r == 0.0 || d == 0.0 || !d.is_finite() {
            break;
        }
        let next = a - r / d;
        if !(0.0..=PI).contains(&next) || fabs(cubic.eval(cos(next))) >= fabs(r) {
            break;
        }
        a = next;
    }
    a
}

/// `cos BC` for the diagonal closing the chain `B–D–E–C` of three arcs of
/// length `a` with interior angles `delta` at `D` and `epsilon` at `E`.
#[must_use]
pub fn diagonal_bc(a: Radians, delta: Radians, epsilon: Radians) -> f64 {
    let ca = a.cos();
    let (cd, sd) = (delta.cos(), delta.sin());
    let (ce, se) = (epsilon.cos(), epsilon.sin());
    ca * ca * ca * (1.0 - cd) * (1.0 - ce) - ca * ca * sd * se + ca * (cd + ce - cd * ce) + sd * se
}

/// The equal sides `b` of an isosceles triangle with apex angle `alpha`
/// and base `BC`: `cos²b + sin²b cos α = cos BC`.
pub fn solve_b_from_diagonal(alpha: Radians, cos_bc: f64) -> Result<Radians, SphtrigError> {
    let ca = alpha.cos();
    if fabs(1.0 - ca) < 1e-15 {
        return Err(SphtrigError::Argument { what: "apex angle", value: alpha.0 });
    }
    let cb2 = (cos_bc - ca) / (1.0 - ca);
    if !(-CLAMP_WINDOW..=1.0 + CLAMP_WINDOW).contains(&cb2) {
        return Err(SphtrigError::Domain { what: "solve_b_from_diagonal", value: cb2 });
    }
    acos_checked(sqrt(cb2.clamp(0.0, 1.0)), "solve_b_from_diagonal").map(Radians)
}

/// `c3·x³ + c2·x² + c1·x + c0`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Cubic {
    pub c3: f64,
    pub c2: f64,
    pub c1: f64,
    pub c0: f64,
}

impl Cubic {
    #[must_use]
    pub const fn new(c3: f64, c2: f64, c1: f64, c0: f64) -> Self {
        Self { c3, c2, c1, c0 }
    }

    #[must_use]
    pub fn eval(&self, x: f64) -> f64 {
        ((self.c3 * x + self.c2) * x + self.c1) * x + self.c0
    }

    #[must_use]
    pub fn derivative(&self, x: f64) -> f64 {
        (3.0 * self.c3 * x + 2.0 * self.c2) * x + self.c1
    }

    /// Divide through by the leading coefficient.
    #[must_use]
    pub fn monic(&self) -> Self {
        Self::new(1.0, self.c2 / self.c3, self.c1 / self.c3, self.c0 / self.c3)
    }

    fn scale(&self) -> f64 {
        [self.c3, self.c2, self.c1, self.c0].iter().fold(0.0, |m, c| m.max(fabs(*c)))
    }

    /// Real roots, ascending. See [`cubic_real_roots`].
    #[must_use]
    pub fn real_roots(&self) -> Vec<f64> {
        cubic_real_roots(self)
    }
}

/// All real roots of a cubic with `c3 ≠ 0`, ascending and deduplicated.
///
/// Seeds come from the trigonometric form (three real roots) or Cardano's
/// formula (one), then each is polished by Newton's method.
#[must_use]
pub fn cubic_real_roots(c: &Cubic) -> Vec<f64> {
    if c.c3 == 0.0 || !c.c3.is_finite() {
        return Vec::new();
    }
    let m = c.monic();
    let (b, cc, d) = (m.c2, m.c1, m.c0);
    // x = t − b/3 gives t³ + p t + q = 0
    let shift = b / 3.0;
    let p = cc - b * b / 3.0;
    let q = 2.0 * b * b * b / 27.0 - b * cc / 3.0 + d;
    let disc = q * q / 4.0 + p * p * p / 27.0;

    let mut seeds = Vec::with_capacity(3);
    if p < 0.0 && disc <= 0.0 {
        let r = 2.0 * sqrt(-p / 3.0);
        let arg = (3.0 * q / (p * r)).clamp(-1.0, 1.0);
        let phi = acos(arg) / 3.0;
        for k in 0..3 {
            seeds.push(r * cos(phi - 2.0 * PI * f64::from(k) / 3.0) - shift);
        }
    } else {
        let s = sqrt(disc.max(0.0));
        seeds.push(cbrt(-q / 2.0 + s) + cbrt(-q / 2.0 - s) - shift);
    }

    let tol = 1e-13 * c.scale();
    let mut roots: Vec<f64> = seeds.into_iter().map(|x| newton(c, x, tol)).collect();
    roots.sort_by(f64::total_cmp);
    roots.dedup_by(|x, y| fabs(*x - *y) < 1e-10);
    roots
}

fn newton(c: &Cubic, mut x: f64, tol: f64) -> f64 {
    for _ in 0..50 {
        let r = c.eval(x);
        if fabs(r) <= tol * 1e-3 {
            break;
        }
        let d = c.derivative(x);
        if d == 0.0 {
            break;
        }
        let next = x - r / d;
        if fabs(c.eval(next)) >= fabs(r) {
            break;
        }
        x = next;
    }
    x
}
