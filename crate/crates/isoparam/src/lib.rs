//! Exact-arithmetic toolkit for isoparametric polynomials and the
//! positive-semidefinite forms they induce.
//!
//! The crate constructs the Cartan-Munzner polynomials of each degree
//! family, verifies their defining differential identities symbolically,
//! builds and checks sum-of-squares certificates over the rationals, and
//! produces sound non-sos certificates from exact zero samples. Every
//! positive claim goes through exact arithmetic; floating point appears
//! only as a search heuristic inside the Gram-matrix prober.

pub mod clifford;
pub mod isopoly;
pub mod hyper;
pub mod linalg;
pub mod poly;
pub mod scalar;

pub use poly::{Monomial, Polynomial};
pub use scalar::{Rational, Scalar};
