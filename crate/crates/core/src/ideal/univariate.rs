//! Dense univariate helpers for minimal polynomials: derivative, gcd and
//! squarefree part. Coefficients are indexed by degree.

use num_traits::Zero;

use crate::polyring::{Monomial, Polynomial, Ring, Scalar};

#[derive(Clone, Debug, PartialEq)]
pub(crate) struct Univariate(Vec<Scalar>);

impl Univariate {
    /// Coefficients of `p`, which must involve only variable `var`.
    pub fn from_poly(p: &Polynomial, var: usize) -> Univariate {
        let deg = p.degree_in(var).unwrap_or(0) as usize;
        let mut c = vec![Scalar::zero(); deg + 1];
        for (m, a) in p.terms() {
            debug_assert!(m.is_pure_power_of(var));
            c[m.exponents()[var] as usize] = a.clone();
        }
        Univariate(c).trimmed()
    }

    pub fn to_poly(&self, ring: &Ring, var: usize) -> Polynomial {
        let n = ring.nvars();
        Polynomial::from_terms(
            ring,
            self.0.iter().enumerate().map(|(k, a)| {
                let mut e = vec![0; n];
                e[var] = k as u32;
                (Monomial::new(e), a.clone())
            }),
        )
    }

    fn trimmed(mut self) -> Self {
        while self.0.last().is_some_and(Zero::is_zero) {
            self.0.pop();
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn derivative(&self) -> Univariate {
        Univariate(self.0.iter().enumerate().skip(1).map(|(k, a)| a * &Scalar::from_int(k as i64)).collect()).trimmed()
    }

    fn monic(&self) -> Univariate {
        match self.0.last() {
            Some(lc) => {
                let inv = lc.inv().expect("trimmed");
                Univariate(self.0.iter().map(|a| a * &inv).collect())
            }
            None => self.clone(),
        }
    }

    pub fn div_rem(&self, d: &Univariate) -> (Univariate, Univariate) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut r = self.0.clone();
        let dd = d.degree();
        let lc_inv = d.0[dd].inv().expect("trimmed");
        if r.len() <= dd {
            return (Univariate(Vec::new()), self.clone());
        }
        let mut q = vec![Scalar::zero(); r.len() - dd];
        for k in (dd..r.len()).rev() {
            let c = &r[k] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (j, b) in d.0.iter().enumerate() {
                r[k - dd + j] -= &(&c * b);
            }
            q[k - dd] = c;
        }
        r.truncate(dd);
        (Univariate(q).trimmed(), Univariate(r).trimmed())
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Univariate) -> Univariate {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `p / gcd(p, p')`, monic.
    pub fn squarefree_part(&self) -> Univariate {
        let g = self.gcd(&self.derivative());
        if g.is_zero() {
            return self.clone();
        }
        self.div_rem(&g).0.monic()
    }

    #[cfg(test)]
    pub fn is_squarefree(&self) -> bool {
        let g = self.gcd(&self.derivative());
        g.0.len() == 1 && g.0[0] == Scalar::from_int(1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::parse_polynomial;

    #[test]
    fn squarefree_parts() {
        let r = Ring::rational(["x", "y"]);
        let p = parse_polynomial(&r, "(x-1)^3*(x+2)").unwrap();
        let u = Univariate::from_poly(&p, 0);
        assert!(!u.is_squarefree());
        let s = u.squarefree_part();
        assert_eq!(s.to_poly(&r, 0), parse_polynomial(&r, "(x-1)*(x+2)").unwrap());
        assert!(s.is_squarefree());
        let y2 = Univariate::from_poly(&parse_polynomial(&r, "y^2").unwrap(), 1);
        assert_eq!(y2.squarefree_part().to_poly(&r, 1), r.var(1));
    }

    #[test]
    fn gcd_and_division() {
        let r = Ring::rational(["x"]);
        let a = Univariate::from_poly(&parse_polynomial(&r, "x^3 - x").unwrap(), 0);
        let b = Univariate::from_poly(&parse_polynomial(&r, "2*x^2 - 2").unwrap(), 0);
        assert_eq!(a.gcd(&b).to_poly(&r, 0), parse_polynomial(&r, "x^2 - 1").unwrap());
        let (q, rem) = a.div_rem(&b);
        assert_eq!(q.to_poly(&r, 0), parse_polynomial(&r, "1/2*x").unwrap());
        assert!(rem.is_zero());
    }
}
