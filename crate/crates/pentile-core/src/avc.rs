//! Vertex combinations: which multisets of angles can meet at a vertex.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::f64::consts::PI;
use core::fmt;

use libm::fabs;
use num_rational::Rational64;
use thiserror::Error;

use crate::label::Angle;
use crate::pentagon::Linear;

/// Angle-sum tolerance for numeric enumeration.
pub const SUM_TOL: f64 = 1e-6;

/// Default largest vertex degree considered.
pub const DEFAULT_MAX_DEGREE: u32 = 6;

/// Even face counts searched by [`solve_f_candidates`].
pub const F_RANGE: (u32, u32) = (16, 2000);

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum AvcError {
    #[error("vertex equations are inconsistent")]
    Inconsistent,
    #[error("angles {0:?} stay undetermined")]
    Underdetermined(Vec<Angle>),
    #[error("{0} is not a degree-3 vertex with exactly two ab-angles and one a²-angle")]
    NotSingleBEdge(VertexType),
    #[error("cannot parse vertex type {0:?}")]
    Parse(String),
}

/// Multiset of angles at one vertex, counts indexed by [`Angle::index`].
///
/// Ordered by degree, then by counts in decreasing lexicographic order, which
/// lists `α³, βγδ, δε², β²γ², βγε², ε⁴` the way they are usually written.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct VertexType(pub [u32; 5]);

impl VertexType {
    #[must_use]
    pub fn from_angles(angles: &[Angle]) -> Self {
        let mut c = [0; 5];
        for a in angles {
            c[a.index()] += 1;
        }
        Self(c)
    }

    #[must_use]
    pub fn count(&self, a: Angle) -> u32 {
        self.0[a.index()]
    }

    #[must_use]
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// An even number of ab-angles.
    #[must_use]
    pub fn parity_ok(&self) -> bool {
        (self.count(Angle::Beta) + self.count(Angle::Gamma)) % 2 == 0
    }

    /// Around a vertex each edge is shared by two neighbouring angles, so a
    /// `b²`-angle and an `a²`-angle cannot both appear without an ab-angle
    /// between them.
    #[must_use]
    pub fn edges_ok(&self) -> bool {
        let b2 = self.count(Angle::Alpha) > 0;
        let a2 = self.count(Angle::Delta) + self.count(Angle::Epsilon) > 0;
        let ab = self.count(Angle::Beta) + self.count(Angle::Gamma) > 0;
        !(b2 && a2 && !ab)
    }

    #[must_use]
    pub fn angle_sum(&self, angles: &[f64; 5]) -> f64 {
        self.0.iter().zip(angles).map(|(&n, &x)| f64::from(n) * x).sum()
    }

    /// Letters with exponent digits, e.g. `bge2` for `βγε²`.
    #[must_use]
    pub fn ascii(&self) -> String {
        self.render(|a| a.ascii(), |n| char::from_digit(n, 10))
    }

    /// Parse either [`VertexType::ascii`] or the Greek notation.
    pub fn parse(s: &str) -> Result<Self, AvcError> {
        let err = || AvcError::Parse(s.into());
        let mut c = [0u32; 5];
        let mut chars = s.chars().peekable();
        while let Some(ch) = chars.next() {
            let a = Angle::ALL.into_iter().find(|a| a.ascii() == ch || a.symbol() == ch).ok_or_else(err)?;
            let mut n = 0u32;
            while let Some(d) = chars.peek().and_then(|&d| d.to_digit(10).or_else(|| superscript_value(d))) {
                n = n * 10 + d;
                chars.next();
            }
            c[a.index()] += n.max(1);
        }
        if c == [0; 5] {
            return Err(err());
        }
        Ok(Self(c))
    }

    fn render(&self, letter: impl Fn(Angle) -> char, digit: impl Fn(u32) -> Option<char>) -> String {
        let mut s = String::new();
        for a in Angle::ALL {
            let n = self.count(a);
            if n == 0 {
                continue;
            }
            s.push(letter(a));
            if n > 1 {
                for d in alloc::format!("{n}").chars() {
                    s.extend(d.to_digit(10).and_then(&digit));
                }
            }
        }
        s
    }
}

const SUPERSCRIPTS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];

fn superscript_value(c: char) -> Option<u32> {
    SUPERSCRIPTS.iter().position(|&s| s == c).map(|i| i as u32)
}

impl fmt::Display for VertexType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(|a| a.symbol(), |n| SUPERSCRIPTS.get(n as usize).copied()))
    }
}

impl Ord for VertexType {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for VertexType {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Candidate vertices for one face count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AvcSet {
    pub f: u32,
    pub items: Vec<VertexType>,
}

impl fmt::Display for AvcSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.items.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Filters applied during enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Filters {
    pub max_degree: u32,
    pub parity: bool,
    pub edges: bool,
    /// Only vertices with as many `β` as `γ`.
    pub balanced: bool,
}

impl Default for Filters {
    fn default() -> Self {
        Self { max_degree: DEFAULT_MAX_DEGREE, parity: true, edges: true, balanced: false }
    }
}

/// Every vertex type of degree `3..=max_degree` whose angles sum to `2π`,
/// with the parity and edge-matching filters on.
#[must_use]
pub fn enumerate_vertex_types(angles: &[f64; 5], max_degree: u32) -> Vec<VertexType> {
    enumerate_with(angles, Filters { max_degree, ..Filters::default() })
}

#[must_use]
pub fn enumerate_with(angles: &[f64; 5], filters: Filters) -> Vec<VertexType> {
    let mut out = Vec::new();
    let mut counts = [0u32; 5];
    collect(angles, &filters, 0, 0.0, &mut counts, &mut out);
    out.sort();
    out
}

fn collect(angles: &[f64; 5], filters: &Filters, k: usize, sum: f64, counts: &mut [u32; 5], out: &mut Vec<VertexType>) {
    let deg: u32 = counts.iter().sum();
    if k == 5 {
        let v = VertexType(*counts);
        let keep = deg >= 3
            && fabs(sum - 2.0 * PI) <= SUM_TOL
            && (!filters.parity || v.parity_ok())
            && (!filters.edges || v.edges_ok())
            && (!filters.balanced || v.count(Angle::Beta) == v.count(Angle::Gamma));
        if keep {
            out.push(v);
        }
        return;
    }
    let mut n = 0;
    loop {
        counts[k] = n;
        let s = sum + f64::from(n) * angles[k];
        if s > 2.0 * PI + SUM_TOL || deg + n > filters.max_degree {
            break;
        }
        collect(angles, filters, k + 1, s, counts, out);
        n += 1;
    }
    counts[k] = 0;
}

/// Angles solved from a set of vertices together with the pentagon angle sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AngleSolution {
    /// Forms of the individually determined angles.
    pub forms: [Option<Linear>; 5],
    /// `β + γ`, when the system pins the sum but not the split.
    pub beta_plus_gamma: Option<Linear>,
    /// Angles with no determined value.
    pub free: Vec<Angle>,
}

impl AngleSolution {
    #[must_use]
    pub fn form(&self, a: Angle) -> Option<Linear> {
        self.forms[a.index()]
    }

    /// `β + γ`, whether known as a sum or from the two parts.
    #[must_use]
    pub fn beta_gamma_sum(&self) -> Option<Linear> {
        self.beta_plus_gamma.or_else(|| Some(self.form(Angle::Beta)? + self.form(Angle::Gamma)?))
    }

    /// Error unless every angle is known, allowing only the `β, γ` split free.
    pub fn require_determined(&self) -> Result<&Self, AvcError> {
        let split_only = self.beta_plus_gamma.is_some() && self.free.iter().all(|a| matches!(a, Angle::Beta | Angle::Gamma));
        if self.free.is_empty() || split_only {
            Ok(self)
        } else {
            Err(AvcError::Underdetermined(self.free.clone()))
        }
    }
}

type Row = ([Rational64; 5], Linear);

/// Solve `Σ nᵢ·angleᵢ = 2π` for each vertex together with
/// `α + β + γ + δ + ε = (3 + 4/f)π`. With `f` known the forms are still
/// returned symbolically; `f` only decides consistency.
pub fn solve_angles_from_base(vertices: &[VertexType], f: Option<u32>) -> Result<AngleSolution, AvcError> {
    let zero = Rational64::new(0, 1);
    let one = Rational64::new(1, 1);
    let mut rows: Vec<Row> = vertices
        .iter()
        .map(|v| (v.0.map(|n| Rational64::from(i64::from(n))), Linear::constant((2, 1))))
        .collect();
    rows.push(([one; 5], Linear::new((3, 1), (4, 1))));

    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut r = 0;
    for c in 0..5 {
        let Some(p) = (r..rows.len()).find(|&i| rows[i].0[c] != zero) else { continue };
        rows.swap(r, p);
        let inv = one / rows[r].0[c];
        scale_row(&mut rows[r], inv);
        for i in 0..rows.len() {
            if i != r && rows[i].0[c] != zero {
                let k = rows[i].0[c];
                let pivot = rows[r];
                for j in 0..5 {
                    rows[i].0[j] -= k * pivot.0[j];
                }
                rows[i].1 = Linear { q: rows[i].1.q - k * pivot.1.q, r: rows[i].1.r - k * pivot.1.r };
            }
        }
        pivots.push((r, c));
        r += 1;
    }
    for row in &rows[r..] {
        let rhs = row.1;
        let consistent = match f {
            Some(f) => rhs.at(f) == zero,
            None => rhs.q == zero && rhs.r == zero,
        };
        if !consistent {
            return Err(AvcError::Inconsistent);
        }
    }

    let mut forms = [None; 5];
    let mut beta_plus_gamma = None;
    for &(row, c) in &pivots {
        let (coef, rhs) = rows[row];
        let others: Vec<usize> = (0..5).filter(|&j| j != c && coef[j] != zero).collect();
        match others.as_slice() {
            [] => forms[c] = Some(rhs),
            [j] if is_beta_gamma(c, *j) && coef[*j] == one => beta_plus_gamma = Some(rhs),
            _ => {}
        }
    }
    let free = Angle::ALL.into_iter().filter(|a| forms[a.index()].is_none()).collect();
    Ok(AngleSolution { forms, beta_plus_gamma, free })
}

fn is_beta_gamma(i: usize, j: usize) -> bool {
    let (b, g) = (Angle::Beta.index(), Angle::Gamma.index());
    (i, j) == (b, g) || (i, j) == (g, b)
}

fn scale_row(row: &mut Row, k: Rational64) {
    for x in &mut row.0 {
        *x *= k;
    }
    row.1 = Linear { q: row.1.q * k, r: row.1.r * k };
}

/// Which vertices [`solve_f_candidates`] tries. `β` and `γ` always enter
/// with equal exponents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexPattern {
    pub allowed: [bool; 5],
    pub min_degree: u32,
    pub max_degree: u32,
    /// Vertices already known to be present, not reported.
    pub exclude: Vec<VertexType>,
}

impl VertexPattern {
    #[must_use]
    pub fn new(allowed: &[Angle], min_degree: u32, max_degree: u32) -> Self {
        let mut mask = [false; 5];
        for a in allowed {
            mask[a.index()] = true;
        }
        Self { allowed: mask, min_degree, max_degree, exclude: Vec::new() }
    }

    #[must_use]
    pub fn excluding(mut self, v: &[VertexType]) -> Self {
        self.exclude.extend_from_slice(v);
        self
    }
}

/// All `(f, vertex)` with `f` even in [`F_RANGE`] for which the vertex,
/// drawn from `pattern`, has angle sum exactly `2π`. Sorted by `f`, then
/// vertex order.
#[must_use]
pub fn solve_f_candidates(forms: &AngleSolution, pattern: &VertexPattern) -> Vec<(u32, VertexType)> {
    let zero = Rational64::new(0, 1);
    let two = Rational64::new(2, 1);
    let bg = forms.beta_gamma_sum();
    let mut out = Vec::new();
    let max = pattern.max_degree;
    for na in 0..=max {
        for nbg in 0..=max / 2 {
            for nd in 0..=max {
                for ne in 0..=max {
                    let v = VertexType([na, nbg, nbg, nd, ne]);
                    let deg = v.degree();
                    if deg < pattern.min_degree || deg > max || !v.edges_ok() || pattern.exclude.contains(&v) {
                        continue;
                    }
                    let uses = |a: Angle, n: u32| {
                        n == 0 || (pattern.allowed[a.index()] && (a != Angle::Beta || pattern.allowed[Angle::Gamma.index()]))
                    };
                    if !(uses(Angle::Alpha, na) && uses(Angle::Beta, nbg) && uses(Angle::Delta, nd) && uses(Angle::Epsilon, ne)) {
                        continue;
                    }
                    let mut total = Linear::constant((0, 1));
                    let terms = [(forms.form(Angle::Alpha), na), (bg, nbg), (forms.form(Angle::Delta), nd), (forms.form(Angle::Epsilon), ne)];
                    let mut known = true;
                    for (form, n) in terms {
                        if n == 0 {
                            continue;
                        }
                        match form {
                            Some(l) => total = total + l * i64::from(n),
                            None => known = false,
                        }
                    }
                    if !known {
                        continue;
                    }
                    // total.q + total.r / f = 2
                    let gap = two - total.q;
                    if gap == zero {
                        if total.r == zero {
                            out.extend((F_RANGE.0..=F_RANGE.1).step_by(2).map(|f| (f, v)));
                        }
                        continue;
                    }
                    let f = total.r / gap;
                    if f.is_integer() {
                        let f = *f.numer();
                        if f % 2 == 0 && (i64::from(F_RANGE.0)..=i64::from(F_RANGE.1)).contains(&f) {
                            out.push((f as u32, v));
                        }
                    }
                }
            }
        }
    }
    out.sort_by(|x, y| x.0.cmp(&y.0).then(x.1.cmp(&y.1)));
    out
}

/// Group `(f, vertex)` pairs into one [`AvcSet`] per `f`.
#[must_use]
pub fn group_by_f(pairs: &[(u32, VertexType)]) -> Vec<AvcSet> {
    let mut map: BTreeMap<u32, Vec<VertexType>> = BTreeMap::new();
    for &(f, v) in pairs {
        map.entry(f).or_default().push(v);
    }
    map.into_iter().map(|(f, items)| AvcSet { f, items }).collect()
}

/// Every angle occurs exactly `f` times over all vertices of a tiling.
#[must_use]
pub fn check_balance(census: &BTreeMap<VertexType, u32>, f: u32) -> bool {
    Angle::ALL.into_iter().all(|a| census.iter().map(|(v, &n)| v.count(a) * n).sum::<u32>() == f)
}

/// Whether two degree-3 vertices, each with two ab-angles and one
/// a²-angle, can both occur in one tiling.
pub fn degree3_pair_compatible(v1: VertexType, v2: VertexType) -> Result<bool, AvcError> {
    let single = |v: VertexType| {
        v.degree() == 3
            && v.count(Angle::Alpha) == 0
            && v.count(Angle::Beta) + v.count(Angle::Gamma) == 2
            && v.count(Angle::Delta) + v.count(Angle::Epsilon) == 1
    };
    for v in [v1, v2] {
        if !single(v) {
            return Err(AvcError::NotSingleBEdge(v));
        }
    }
    if v1 == v2 {
        return Ok(true);
    }
    let p = |s: &str| VertexType::parse(s).expect("valid literal");
    let admissible = [(p("bgd"), p("g2e")), (p("bge"), p("b2d")), (p("b2d"), p("g2e"))];
    Ok(admissible.iter().any(|&(x, y)| (x, y) == (v1, v2) || (y, x) == (v1, v2)))
}
