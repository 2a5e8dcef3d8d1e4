//! Combinatorial Auslander-Reiten quivers of Weyl groups of type A, D and E.
//!
//! The crate builds the quivers Υ attached to commutation classes of reduced
//! words of the longest element, their twisted and folded variants, and the
//! order statistics read from them (gdist, radius, minimal pairs, distance
//! polynomials). The `denom` module compares these against closed-form
//! denominator formulas and Dorey's rule for untwisted quantum affine algebras.
//!
//! Everything is exact integer arithmetic; no floating point is used.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod arq;
pub mod cartan;
pub mod denom;
pub mod distpoly;
pub mod error;
pub mod seqorder;
pub mod twisted;
pub mod weyl;

pub use cartan::{Automorphism, CartanType, Family, FoldKind};
pub use error::{Error, Result};
pub use weyl::{Class, RootSystem};
