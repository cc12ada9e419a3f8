//! Exact sparse multivariate polynomials over ℚ and ℚ(i).

mod fischer;
mod monomial;
mod order;
mod parse;
mod polynomial;
mod scalar;

pub use fischer::{apply_diff_op, fischer_product, partial};
pub use monomial::{monomials_of_degree, Monomial};
pub use order::MonomialOrder;
pub use parse::parse_polynomial;
pub use polynomial::{Field, Polynomial, Ring};
pub use scalar::Scalar;

/// Leading form `p^` of a nonzero polynomial.
pub fn leading_form(p: &Polynomial) -> crate::Result<Polynomial> {
    p.leading_form()
}

/// Degree-`k` homogeneous component of `p`.
pub fn homogeneous_component(p: &Polynomial, k: u32) -> Polynomial {
    p.homogeneous_component(k)
}

/// Exact value of `p` at `point`.
pub fn evaluate(p: &Polynomial, point: &[Scalar]) -> crate::Result<Scalar> {
    p.evaluate(point)
}
