//! Exact arithmetic for curves and surfaces in the flag threefold
//! `F = {(p, l) in P2 x P2 : p0 l0 + p1 l1 + p2 l2 = 0}`.
//!
//! The crate is organised bottom-up:
//!
//! - [`algebra`]: Gaussian rationals, prime fields, binary forms, bihomogeneous
//!   forms, determinants and fraction-free elimination.
//! - [`geometry`]: projective points, conics `L_{q,m}`, twistor fibers, the
//!   involution `j`, containment and disjointness tests.
//! - [`linear_systems`]: dimensions of line bundles and the interpolation
//!   problem for surfaces through prescribed conics.
//! - [`invariants`]: closed-form Chern numbers, Miyaoka-type bounds and Chow
//!   ring products.
//! - [`ruled`]: `(a,a)` surfaces swept by a real one-parameter family of
//!   twistor fibers.
//! - [`census`]: brute-force enumeration of conics on a surface over a small
//!   prime field.

pub mod algebra;
pub mod census;
mod error;
pub mod geometry;
pub mod invariants;
pub mod linear_systems;
pub mod rng;
pub mod ruled;

pub use algebra::{BiForm, BinaryForm, Field, Fp, GaussianRational, Monomial, Ring};
pub use error::{Error, ErrorClass, Result};
pub use geometry::{Conic, FlagCurve, FlagPoint, ProjPoint};
