//! Term vectors kept sorted under a fixed monomial order, for the inner
//! loops of division and S-polynomial reduction.

use std::cmp::Ordering;

use num_traits::Zero;

use crate::polyring::{Monomial, MonomialOrder, Polynomial, Ring, Scalar};

/// Terms in ascending order; the leading term is the last one.
#[derive(Clone, Debug)]
pub(crate) struct SortedPoly {
    pub terms: Vec<(Monomial, Scalar)>,
}

impl SortedPoly {
    pub fn from_poly(p: &Polynomial, order: MonomialOrder) -> Self {
        let mut terms: Vec<_> = p.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
        terms.sort_by(|a, b| order.cmp(&a.0, &b.0));
        SortedPoly { terms }
    }

    pub fn to_poly(&self, ring: &Ring) -> Polynomial {
        Polynomial::from_terms(ring, self.terms.iter().cloned())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&(Monomial, Scalar)> {
        self.terms.last()
    }

    pub fn scale(&mut self, c: &Scalar) {
        for (_, a) in &mut self.terms {
            *a = &*a * c;
        }
    }

    /// `self - c·x^m·other`, merged in one pass.
    pub fn sub_scaled(&self, c: &Scalar, m: &Monomial, other: &SortedPoly, order: MonomialOrder) -> SortedPoly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other.terms.iter().map(|(k, v)| (k.mul(m), v * c)).peekable();
        loop {
            let ord = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Less,
                (None, Some(_)) => Ordering::Greater,
                (Some(x), Some(y)) => order.cmp(&x.0, &y.0),
            };
            match ord {
                Ordering::Less => out.push(a.next().unwrap().clone()),
                Ordering::Greater => {
                    let (k, v) = b.next().unwrap();
                    out.push((k, -v));
                }
                Ordering::Equal => {
                    let (k, x) = a.next().unwrap();
                    let (_, y) = b.next().unwrap();
                    let v = x - &y;
                    if !v.is_zero() {
                        out.push((k.clone(), v));
                    }
                }
            }
        }
        SortedPoly { terms: out }
    }
}
