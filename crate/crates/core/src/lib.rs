//! Exact interpolation on algebraic varieties.
//!
//! Varieties are given by their ideals. The crate decides when polynomial
//! data prescribed on several varieties can be matched by one polynomial,
//! constructs the interpolant with cofactor certificates that can be checked
//! by plain expansion, and solves polynomial boundary-value problems
//! `L̄(D)f = 0, f = p on 𝒱(q)` through the Fischer decomposition.

pub mod error;
pub mod groebner;
pub mod ideal;
pub mod interp;
pub mod linalg;
pub mod pde;
pub mod polyring;

pub use error::{Error, Result};
pub use polyring::{Field, Monomial, MonomialOrder, Polynomial, Ring, Scalar};
