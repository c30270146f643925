//! Unit-sphere vector helpers shared by the pentagon solver and realization.

use core::f64::consts::PI;

use libm::{atan2, cos, sin, sqrt};

pub type Vec3 = [f64; 3];

pub const NORTH: Vec3 = [0.0, 0.0, 1.0];

#[must_use]
pub fn dot(u: Vec3, v: Vec3) -> f64 {
    u[0] * v[0] + u[1] * v[1] + u[2] * v[2]
}

#[must_use]
pub fn cross(u: Vec3, v: Vec3) -> Vec3 {
    [u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]]
}

#[must_use]
pub fn add(u: Vec3, v: Vec3) -> Vec3 {
    [u[0] + v[0], u[1] + v[1], u[2] + v[2]]
}

#[must_use]
pub fn sub(u: Vec3, v: Vec3) -> Vec3 {
    [u[0] - v[0], u[1] - v[1], u[2] - v[2]]
}

#[must_use]
pub fn scale(s: f64, u: Vec3) -> Vec3 {
    [s * u[0], s * u[1], s * u[2]]
}

#[must_use]
pub fn norm(u: Vec3) -> f64 {
    sqrt(dot(u, u))
}

#[must_use]
pub fn normalize(u: Vec3) -> Vec3 {
    scale(1.0 / norm(u), u)
}

/// Great-circle distance between unit vectors.
#[must_use]
pub fn arc_length(u: Vec3, v: Vec3) -> f64 {
    atan2(norm(cross(u, v)), dot(u, v))
}

/// Unit tangent at `u` pointing along the great circle towards `v`.
#[must_use]
pub fn tangent_towards(u: Vec3, v: Vec3) -> Vec3 {
    normalize(sub(v, scale(dot(u, v), u)))
}

/// Rotate `v` about the unit axis `k` by `angle` (counterclockwise seen
/// from the tip of `k`).
#[must_use]
pub fn rotate_about(v: Vec3, k: Vec3, angle: f64) -> Vec3 {
    let (c, s) = (cos(angle), sin(angle));
    let kv = cross(k, v);
    let kd = dot(k, v) * (1.0 - c);
    [
        v[0] * c + kv[0] * s + k[0] * kd,
        v[1] * c + kv[1] * s + k[1] * kd,
        v[2] * c + kv[2] * s + k[2] * kd,
    ]
}

/// Move along the great circle from `p` with unit tangent `t` by arc `s`,
/// returning the new point and the transported tangent.
#[must_use]
pub fn advance(p: Vec3, t: Vec3, s: f64) -> (Vec3, Vec3) {
    let (c, sn) = (cos(s), sin(s));
    (add(scale(c, p), scale(sn, t)), sub(scale(c, t), scale(sn, p)))
}

/// Interior angle at `v` of a counterclockwise polygon with neighbours
/// `prev` and `next`, in `[0, 2π)`. Reflex corners come out above π.
#[must_use]
pub fn interior_angle(prev: Vec3, v: Vec3, next: Vec3) -> f64 {
    let t1 = tangent_towards(v, next);
    let t2 = tangent_towards(v, prev);
    let a = atan2(dot(v, cross(t1, t2)), dot(t1, t2));
    if a < 0.0 {
        a + 2.0 * PI
    } else {
        a
    }
}

/// Walk a closed polygon: start at `start` heading along `heading`, and at
/// the start of each step `i > 0` turn left by `π − angles[i]`.
/// Returns the corners visited and the point reached after the last step.
#[must_use]
pub fn turtle<const N: usize>(start: Vec3, heading: Vec3, angles: &[f64; N], lengths: &[f64; N]) -> ([Vec3; N], Vec3) {
    let mut pts = [[0.0; 3]; N];
    let (mut p, mut t) = (start, heading);
    for i in 0..N {
        if i > 0 {
            t = rotate_about(t, p, PI - angles[i]);
        }
        pts[i] = p;
        (p, t) = advance(p, t, lengths[i]);
    }
    (pts, p)
}

/// Whether the open great arcs `p1p2` and `q1q2` (each shorter than π)
/// cross at an interior point.
#[must_use]
pub fn arcs_cross(p1: Vec3, p2: Vec3, q1: Vec3, q2: Vec3) -> bool {
    let n1 = cross(p1, p2);
    let n2 = cross(q1, q2);
    let d = cross(n1, n2);
    let dn = norm(d);
    if dn < 1e-14 {
        return false;
    }
    let d = scale(1.0 / dn, d);
    let within = |x: Vec3, a: Vec3, b: Vec3| {
        let n = cross(a, b);
        dot(cross(a, x), n) > 0.0 && dot(cross(x, b), n) > 0.0
    };
    [d, scale(-1.0, d)].into_iter().any(|x| within(x, p1, p2) && within(x, q1, q2))
}

/// Whether a closed spherical polygon has no self-intersections between
/// non-adjacent edges.
#[must_use]
pub fn is_simple(pts: &[Vec3]) -> bool {
    let n = pts.len();
    for i in 0..n {
        for j in i + 2..n {
            if i == 0 && j == n - 1 {
                continue;
            }
            if arcs_cross(pts[i], pts[(i + 1) % n], pts[j], pts[(j + 1) % n]) {
                return false;
            }
        }
    }
    // Also reject coincident corners.
    for i in 0..n {
        for j in i + 1..n {
            if arc_length(pts[i], pts[j]) < 1e-12 {
                return false;
            }
        }
    }
    true
}
