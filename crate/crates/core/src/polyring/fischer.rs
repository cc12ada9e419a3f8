//! Constant-coefficient differential operators `L(D)` and the Fischer
//! inner product `⟨f, L⟩ = L̄(D)f` on homogeneous polynomials.

use num_traits::Zero;

use super::{Polynomial, Scalar};
use crate::error::{Error, Result};

/// `L(D)f`: substitute `∂/∂x_j` for `x_j` in `operator` and apply to `f`.
pub fn apply_diff_op(operator: &Polynomial, f: &Polynomial) -> Result<Polynomial> {
    operator.check_ring(f)?;
    let mut out = f.ring().zero();
    for (mo, co) in operator.terms() {
        for (mf, cf) in f.terms() {
            if let Some((k, m)) = mo.differentiate(mf) {
                out.add_term(m, &(&(co * cf) * &Scalar::real(k.into())));
            }
        }
    }
    Ok(out)
}

/// `∂f/∂x_index`
pub fn partial(f: &Polynomial, index: usize) -> Polynomial {
    let x = f.ring().var(index);
    apply_diff_op(&x, f).expect("same ring")
}

/// Hermitian Fischer product `Σ α!·a_α·conj(b_α)` of two homogeneous
/// polynomials of the same degree. Zero polynomials are accepted as
/// homogeneous of any degree.
pub fn fischer_product(f: &Polynomial, l: &Polynomial) -> Result<Scalar> {
    f.check_ring(l)?;
    if !f.is_homogeneous() || !l.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    if let (Some(a), Some(b)) = (f.degree(), l.degree()) {
        if a != b {
            return Err(Error::DegreeMismatch(format!("fischer product of degrees {a} and {b}")));
        }
    }
    let mut acc = Scalar::zero();
    for (m, a) in f.terms() {
        let b = l.coeff(m);
        if !b.is_zero() {
            acc += &(&(a * &b.conj()) * &Scalar::real(m.factorial().into()));
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{Field, Ring};

    #[test]
    fn diff_op_examples() {
        let r = Ring::rational(["x", "y"]);
        let (x, y) = (r.var(0), r.var(1));
        let x4 = x.pow(4);
        assert_eq!(apply_diff_op(&x.pow(2), &x4).unwrap(), x.pow(2).scale(&12.into()));
        let lap = x.pow(2) + y.pow(2);
        assert!(apply_diff_op(&lap, &(x.pow(2) - y.pow(2))).unwrap().is_zero());
        assert!(apply_diff_op(&x, &r.constant(7.into())).unwrap().is_zero());
        let other = Ring::rational(["u", "v"]);
        assert_eq!(apply_diff_op(&x, &other.var(0)), Err(Error::RingMismatch));
    }

    #[test]
    fn fischer_product_examples() {
        let r = Ring::rational(["x", "y"]);
        let (x, y) = (r.var(0), r.var(1));
        assert_eq!(fischer_product(&x.pow(2), &x.pow(2)).unwrap(), Scalar::from_int(2));
        assert_eq!(fischer_product(&(&x * &y), &x.pow(2)).unwrap(), Scalar::from_int(0));
        let x2y = &x.pow(2) * &y;
        assert_eq!(fischer_product(&x2y, &x2y).unwrap(), Scalar::from_int(2));
        assert_eq!(fischer_product(&(&x + &r.one()), &x), Err(Error::NotHomogeneous));
        assert!(matches!(fischer_product(&x, &x.pow(2)), Err(Error::DegreeMismatch(_))));
    }

    #[test]
    fn fischer_product_is_conjugate_linear_in_second_argument() {
        let r = Ring::new(["x", "y"], Field::GaussianRational);
        let (x, y) = (r.var(0), r.var(1));
        let f = &x * &y;
        let l = (&x * &y).scale(&Scalar::i());
        // <xy, i·xy> = conj(i)·1!·1! = -i
        assert_eq!(fischer_product(&f, &l).unwrap(), -Scalar::i());
        // agrees with L̄(D)f
        assert_eq!(apply_diff_op(&l.conj(), &f).unwrap(), r.constant(-Scalar::i()));
        let _ = y;
    }
}
