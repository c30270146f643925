//! Spherical tilings by congruent pentagons with edge lengths `a, a, a, b, b`.
//!
//! The crate covers the pentagons themselves ([`pentagon`]), the possible
//! vertex combinations ([`avc`]), combinatorial construction and checking of
//! every tiling ([`tiling`]), and placing tiles on the unit sphere
//! ([`realize`]). [`sphtrig`] holds the trigonometric kernel.
#![no_std]

extern crate alloc;

pub mod avc;
pub mod geom;
pub mod label;
pub mod pentagon;
pub mod realize;
pub mod sphtrig;
pub mod tiling;

pub use label::{Angle, Edge};
pub use pentagon::{PentagonSpec, Reduction};
pub use sphtrig::Radians;
