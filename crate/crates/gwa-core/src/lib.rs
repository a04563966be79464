//! Exact-arithmetic kernel for generalized Weyl algebras (GWAs), their
//! skew-group-ring realizations, finite reflection-group actions, and
//! decision procedures for simplicity, Galois-ring generation, and
//! principal Galois orders.
//!
//! Everything is computed over arbitrary-precision rationals or cyclotomic
//! extensions; equality is always structural equality of canonical forms.

pub mod checkers;
pub mod coeff;
pub mod automorphism;
pub mod error;
pub mod expr;
pub mod group;
pub mod gwa;
pub mod json;
pub mod poly;
pub mod ratfunc;
pub mod skew;
pub mod resultant;

pub use coeff::{FieldDesc, FieldElem, Rational};
pub use error::{KernelError, Result};
pub use gwa::{DegreeVector, GwaElement, GwaPresentation};
pub use automorphism::RingAutomorphism;
pub use poly::{Poly, PolyRing};
pub use ratfunc::RatFunc;
