//! The closed-form formulas checked against walks built from explicit 3×3
//! rotation matrices, sharing no code with the library.

use std::f64::consts::PI;

use pentile_core::pentagon::{solve_family1, solve_family2, solve_subdivision_family};
use pentile_core::sphtrig::{
    angle_from_three_sides, chain3_endpoint, cubic_real_roots, diagonal_bc, side_from_two_sides_angle, solve_b_from_diagonal,
    solve_chain3_for_a, Cubic,
};
use pentile_core::{Radians, Reduction};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SAMPLES: usize = 10_000;
const TOL: f64 = 1e-10;

type M3 = [[f64; 3]; 3];
type V3 = [f64; 3];

/// Rotation by `t` about the unit `axis`.
fn rotation(axis: V3, t: f64) -> M3 {
    let (c, s) = (t.cos(), t.sin());
    let [x, y, z] = axis;
    let k = 1.0 - c;
    [
        [c + x * x * k, x * y * k - z * s, x * z * k + y * s],
        [y * x * k + z * s, c + y * y * k, y * z * k - x * s],
        [z * x * k - y * s, z * y * k + x * s, c + z * z * k],
    ]
}

fn mul(m: &M3, v: V3) -> V3 {
    [0, 1, 2].map(|i| m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2])
}

fn dot(u: V3, v: V3) -> f64 {
    u[0] * v[0] + u[1] * v[1] + u[2] * v[2]
}

fn cross(u: V3, v: V3) -> V3 {
    [u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]]
}

/// A point on the sphere with a unit tangent heading.
#[derive(Clone, Copy)]
struct Walker {
    p: V3,
    t: V3,
}

impl Walker {
    fn start() -> Self {
        Self { p: [0.0, 0.0, 1.0], t: [1.0, 0.0, 0.0] }
    }

    fn forward(&mut self, s: f64) {
        let r = rotation(cross(self.p, self.t), s);
        self.p = mul(&r, self.p);
        self.t = mul(&r, self.t);
    }

    /// Counterclockwise about the outward normal.
    fn left(&mut self, t: f64) {
        self.t = mul(&rotation(self.p, t), self.t);
    }
}

fn rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0x5eed)
}

#[test]
fn chain_of_three_arcs() {
    let mut rng = rng();
    for _ in 0..SAMPLES {
        let a = rng.gen_range(0.0..PI);
        let d = rng.gen_range(0.0..2.0 * PI);
        let mut w = Walker::start();
        let start = w.p;
        w.forward(a);
        w.left(PI - d);
        w.forward(a);
        w.left(-(PI - d));
        w.forward(a);
        let got = chain3_endpoint(Radians(a), Radians(d));
        assert!((got - dot(start, w.p)).abs() < TOL, "a={a} d={d}");
    }
}

#[test]
fn pentagon_diagonal() {
    let mut rng = rng();
    for _ in 0..SAMPLES {
        let a = rng.gen_range(0.0..PI);
        let d = rng.gen_range(0.0..2.0 * PI);
        let e = rng.gen_range(0.0..2.0 * PI);
        let mut w = Walker::start();
        let b = w.p;
        w.forward(a);
        w.left(PI - d);
        w.forward(a);
        w.left(PI - e);
        w.forward(a);
        let got = diagonal_bc(Radians(a), Radians(d), Radians(e));
        assert!((got - dot(b, w.p)).abs() < TOL, "a={a} d={d} e={e}");
    }
}

/// Endpoints of two arcs of lengths `p`, `q` from the north pole with
/// angle `t` between them.
fn hinge(p: f64, q: f64, t: f64) -> (V3, V3) {
    let mut u = Walker::start();
    let mut v = Walker::start();
    v.left(t);
    u.forward(p);
    v.forward(q);
    (u.p, v.p)
}

#[test]
fn law_of_cosines() {
    let mut rng = rng();
    for _ in 0..SAMPLES {
        let p = rng.gen_range(0.1..PI - 0.1);
        let q = rng.gen_range(0.1..PI - 0.1);
        let t = rng.gen_range(0.1..PI - 0.1);
        let (u, v) = hinge(p, q, t);
        let side = side_from_two_sides_angle(Radians(p), Radians(q), Radians(t)).unwrap();
        assert!((side.cos() - dot(u, v)).abs() < TOL);
        let back = angle_from_three_sides(Radians(p), Radians(q), side).unwrap();
        assert!((back.0 - t).abs() < 1e-8, "p={p} q={q} t={t}");
    }
}

#[test]
fn isosceles_side_from_base() {
    let mut rng = rng();
    for _ in 0..SAMPLES {
        let b = rng.gen_range(0.05..PI / 2.0 - 0.05);
        let alpha = rng.gen_range(0.1..2.0 * PI - 0.1);
        let (u, v) = hinge(b, b, alpha);
        let got = solve_b_from_diagonal(Radians(alpha), dot(u, v)).unwrap();
        assert!((got.0 - b).abs() < 1e-8, "b={b} alpha={alpha}");
    }
}

#[test]
fn chain_roots_contain_the_generating_length() {
    let mut rng = rng();
    for _ in 0..SAMPLES {
        let a = rng.gen_range(0.05..PI - 0.05);
        let d = rng.gen_range(0.1..2.0 * PI - 0.1);
        let cos_l = chain3_endpoint(Radians(a), Radians(d));
        let roots = solve_chain3_for_a(cos_l, Radians(d));
        let best = roots.iter().map(|r| (r.0 - a).abs()).fold(f64::INFINITY, f64::min);
        // Near double roots only the residual is meaningful.
        let residual = roots.iter().map(|r| (chain3_endpoint(*r, Radians(d)) - cos_l).abs()).fold(f64::INFINITY, f64::min);
        assert!(best < 1e-6 || residual < TOL, "a={a} d={d} roots={roots:?}");
    }
}

#[test]
fn cubic_roots_from_factors() {
    let mut rng = rng();
    for _ in 0..SAMPLES {
        let mut r = [rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)];
        r.sort_by(f64::total_cmp);
        if r[1] - r[0] < 1e-3 || r[2] - r[1] < 1e-3 {
            continue;
        }
        let k = rng.gen_range(0.5..4.0);
        let c = Cubic::new(k, -k * (r[0] + r[1] + r[2]), k * (r[0] * r[1] + r[1] * r[2] + r[0] * r[2]), -k * r[0] * r[1] * r[2]);
        let got = cubic_real_roots(&c);
        assert_eq!(got.len(), 3, "{r:?} -> {got:?}");
        for (x, y) in got.iter().zip(&r) {
            assert!((x - y).abs() < 1e-9);
        }
    }
}

/// Walk `b, a, a, a, b` with the pentagon's corners and return how far the
/// walk ends from its start, and the heading error.
fn walk_pentagon(angles_abdec: [f64; 5], a: f64, b: f64) -> (f64, f64) {
    let mut w = Walker::start();
    let (p0, t0) = (w.p, w.t);
    let lengths = [b, a, a, a, b];
    for k in 0..5 {
        w.forward(lengths[k]);
        w.left(PI - angles_abdec[(k + 1) % 5]);
    }
    (1.0 - dot(p0, w.p), 1.0 - dot(t0, w.t))
}

#[test]
fn solved_pentagons_close() {
    let mut specs = vec![solve_family1(24), solve_family1(60), solve_family2(24), solve_family2(60)];
    for n in [3, 4, 5] {
        for red in [Reduction::CEqA, Reduction::CEqB] {
            specs.push(solve_subdivision_family(n, red, Radians(PI)));
            specs.push(solve_subdivision_family(n, red, Radians(0.9 * PI)));
        }
    }
    for p in specs {
        let p = p.unwrap();
        let v = p.values().unwrap();
        let (miss, turn) = walk_pentagon([v[0], v[1], v[3], v[4], v[2]], p.a.0, p.b.0);
        assert!(miss.abs() < 1e-12 && turn.abs() < 1e-12, "{p:?}: {miss} {turn}");
    }
}
