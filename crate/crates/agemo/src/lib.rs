//! Exact homological computations for finite-dimensional algebras.
//!
//! The crate works with an algebra given by a structure-constant table over
//! an exact field (the rationals or a prime field), finite-dimensional
//! one-sided modules given by action matrices, and the standard homological
//! toolkit built on top: projective covers, syzygies, transposes, duals
//! against the algebra, cosyzygies, Ext-against-the-algebra profiles, and
//! the torsionless / reflexive / Gorenstein-projective predicates.

pub mod scalar;
pub mod matrix;
pub mod algebra;
pub mod module;
pub mod homological;
pub mod quiver;
pub mod formats;
pub mod config;
pub mod catalog;
pub mod explore;
pub mod verify;
