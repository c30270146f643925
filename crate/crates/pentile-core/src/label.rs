//! Angle and edge labels of the `a³b²` pentagon.

use core::fmt;

/// The five angles of the pentagon. `Alpha` sits between the two `b`-edges,
/// `Beta` and `Gamma` between an `a`- and a `b`-edge, `Delta` and `Epsilon`
/// between two `a`-edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Angle {
    Alpha,
    Beta,
    Gamma,
    Delta,
    Epsilon,
}

impl Angle {
    pub const ALL: [Angle; 5] = [Angle::Alpha, Angle::Beta, Angle::Gamma, Angle::Delta, Angle::Epsilon];

    #[must_use]
    pub const fn index(self) -> usize {
        self as usize
    }

    #[must_use]
    pub const fn symbol(self) -> char {
        match self {
            Angle::Alpha => 'α',
            Angle::Beta => 'β',
            Angle::Gamma => 'γ',
            Angle::Delta => 'δ',
            Angle::Epsilon => 'ε',
        }
    }

    /// Shell-safe letter used in variant names.
    #[must_use]
    pub const fn ascii(self) -> char {
        match self {
            Angle::Alpha => 'a',
            Angle::Beta => 'b',
            Angle::Gamma => 'g',
            Angle::Delta => 'd',
            Angle::Epsilon => 'e',
        }
    }

    #[must_use]
    pub const fn name(self) -> &'static str {
        match self {
            Angle::Alpha => "alpha",
            Angle::Beta => "beta",
            Angle::Gamma => "gamma",
            Angle::Delta => "delta",
            Angle::Epsilon => "epsilon",
        }
    }

    #[must_use]
    pub fn from_name(s: &str) -> Option<Self> {
        Angle::ALL.into_iter().find(|a| a.name() == s)
    }

    /// Number of `b`-edges bounding the angle.
    #[must_use]
    pub const fn b_edges(self) -> u32 {
        match self {
            Angle::Alpha => 2,
            Angle::Beta | Angle::Gamma => 1,
            Angle::Delta | Angle::Epsilon => 0,
        }
    }
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// Edge length label.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Edge {
    A,
    B,
}

impl Edge {
    #[must_use]
    pub const fn flipped(self) -> Self {
        match self {
            Edge::A => Edge::B,
            Edge::B => Edge::A,
        }
    }

    #[must_use]
    pub const fn name(self) -> &'static str {
        match self {
            Edge::A => "a",
            Edge::B => "b",
        }
    }

    #[must_use]
    pub fn from_name(s: &str) -> Option<Self> {
        match s {
            "a" => Some(Edge::A),
            "b" => Some(Edge::B),
            _ => None,
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Corners of the pentagon in counterclockwise order, each paired with the
/// label of the edge leaving it.
pub const PATTERN: [(Angle, Edge); 5] = [
    (Angle::Alpha, Edge::B),
    (Angle::Beta, Edge::A),
    (Angle::Delta, Edge::A),
    (Angle::Epsilon, Edge::A),
    (Angle::Gamma, Edge::B),
];

/// [`PATTERN`] read clockwise: the corner sequence of a reflected tile.
pub const MIRRORED_PATTERN: [(Angle, Edge); 5] = [
    (Angle::Alpha, Edge::B),
    (Angle::Gamma, Edge::A),
    (Angle::Epsilon, Edge::A),
    (Angle::Delta, Edge::A),
    (Angle::Beta, Edge::B),
];

/// Whether a cyclic corner sequence matches the pentagon up to rotation.
/// Returns the rotation and whether the tile is reflected.
#[must_use]
pub fn match_pattern(corners: &[(Angle, Edge); 5]) -> Option<(usize, bool)> {
    for (mirrored, pat) in [(false, &PATTERN), (true, &MIRRORED_PATTERN)] {
        for r in 0..5 {
            if (0..5).all(|k| corners[(k + r) % 5] == pat[k]) {
                return Some((r, mirrored));
            }
        }
    }
    None
}
