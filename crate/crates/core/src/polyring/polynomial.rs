use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use super::{Monomial, MonomialOrder, Scalar};
use crate::error::{Error, Result};

/// Coefficient field of a ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    /// ℚ
    Rational,
    /// ℚ(i)
    GaussianRational,
}

#[derive(Debug, PartialEq, Eq, Hash)]
struct RingData {
    vars: Vec<String>,
    field: Field,
}

/// A polynomial ring `𝕜[x₁,…,x_d]`: variable names in declaration order plus
/// the coefficient field. Cheap to clone.
#[derive(Clone, Debug)]
pub struct Ring(Arc<RingData>);

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for Ring {}

impl Ring {
    pub fn new<S: Into<String>>(vars: impl IntoIterator<Item = S>, field: Field) -> Ring {
        Ring(Arc::new(RingData { vars: vars.into_iter().map(Into::into).collect(), field }))
    }

    pub fn rational<S: Into<String>>(vars: impl IntoIterator<Item = S>) -> Ring {
        Ring::new(vars, Field::Rational)
    }

    pub fn nvars(&self) -> usize {
        self.0.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.0.vars
    }

    pub fn field(&self) -> Field {
        self.0.field
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.0.vars.iter().position(|v| v == name)
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial { ring: self.clone(), terms: BTreeMap::new() }
    }

    pub fn one(&self) -> Polynomial {
        self.constant(Scalar::one())
    }

    pub fn constant(&self, c: Scalar) -> Polynomial {
        self.monomial(Monomial::one(self.nvars()), c)
    }

    pub fn monomial(&self, m: Monomial, c: Scalar) -> Polynomial {
        assert_eq!(m.nvars(), self.nvars(), "monomial arity differs from ring");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { ring: self.clone(), terms }
    }

    /// The variable `x_index`.
    pub fn var(&self, index: usize) -> Polynomial {
        self.monomial(Monomial::var(self.nvars(), index), Scalar::one())
    }

    /// Ring with the extra variables appended after the existing ones.
    pub fn extend<S: Into<String>>(&self, extra: impl IntoIterator<Item = S>) -> Ring {
        let mut vars = self.0.vars.clone();
        vars.extend(extra.into_iter().map(Into::into));
        Ring::new(vars, self.0.field)
    }
}

/// Sparse multivariate polynomial with exact coefficients.
///
/// No stored coefficient is ever zero. Arithmetic operators panic when the
/// operands come from different rings; the fallible entry points elsewhere
/// in the crate check rings first and return [`Error::RingMismatch`].
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: Ring,
    terms: BTreeMap<Monomial, Scalar>,
}

impl Polynomial {
    pub fn from_terms(ring: &Ring, terms: impl IntoIterator<Item = (Monomial, Scalar)>) -> Self {
        let mut p = ring.zero();
        for (m, c) in terms {
            p.add_term(m, &c);
        }
        p
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.iter().next().is_some_and(|(m, c)| m.is_one() && c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms keyed by exponent vector (storage order, not a term order).
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Lowest total degree among the terms; `None` for zero.
    pub fn lowest_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).min()
    }

    /// Largest exponent of variable `index`; `None` for zero.
    pub fn degree_in(&self, index: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.exponents()[index]).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.degree() == self.lowest_degree()
    }

    /// Leading form `p^`: the sum of the terms of top total degree.
    pub fn leading_form(&self) -> Result<Polynomial> {
        let d = self.degree().ok_or(Error::ZeroPolynomial("leading form"))?;
        Ok(self.homogeneous_component(d))
    }

    /// Sum of the degree-`k` terms (zero when there are none).
    pub fn homogeneous_component(&self, k: u32) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().filter(|(m, _)| m.degree() == k).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    pub fn leading_term(&self, order: MonomialOrder) -> Option<(&Monomial, &Scalar)> {
        self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0))
    }

    pub fn leading_monomial(&self, order: MonomialOrder) -> Option<&Monomial> {
        self.leading_term(order).map(|(m, _)| m)
    }

    /// Terms sorted descending under `order`.
    pub fn sorted_terms(&self, order: MonomialOrder) -> Vec<(&Monomial, &Scalar)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| order.cmp(b.0, a.0));
        v
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return self.ring.zero();
        }
        Polynomial { ring: self.ring.clone(), terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    /// `c·x^m·self`
    pub fn mul_term(&self, m: &Monomial, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return self.ring.zero();
        }
        Polynomial { ring: self.ring.clone(), terms: self.terms.iter().map(|(k, a)| (k.mul(m), a * c)).collect() }
    }

    /// Divide by the leading coefficient under `order`; zero stays zero.
    pub fn monic(&self, order: MonomialOrder) -> Polynomial {
        match self.leading_term(order) {
            Some((_, c)) => self.scale(&c.inv().expect("nonzero leading coefficient")),
            None => self.clone(),
        }
    }

    /// Coefficient-wise complex conjugate `p̄`.
    pub fn conj(&self) -> Polynomial {
        Polynomial { ring: self.ring.clone(), terms: self.terms.iter().map(|(m, c)| (m.clone(), c.conj())).collect() }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = self.ring.one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exact value at a point of `𝕜^d`.
    pub fn evaluate(&self, point: &[Scalar]) -> Result<Scalar> {
        if point.len() != self.ring.nvars() {
            return Err(Error::DimensionMismatch { expected: self.ring.nvars(), got: point.len() });
        }
        let mut acc = Scalar::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                if e > 0 {
                    t = &t * &x.pow(e);
                }
            }
            acc += &t;
        }
        Ok(acc)
    }

    /// Move into `ring`, sending variable `i` to variable `map[i]`.
    pub fn remap(&self, ring: &Ring, map: &[usize]) -> Polynomial {
        let mut p = ring.zero();
        for (m, c) in &self.terms {
            p.add_term(m.remap(map, ring.nvars()), c);
        }
        p
    }

    /// Same variables, appended extras absent: embed into `ring.extend(..)`.
    pub fn embed(&self, ring: &Ring) -> Polynomial {
        let map: Vec<usize> = (0..self.ring.nvars()).collect();
        self.remap(ring, &map)
    }

    pub(crate) fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    fn assert_ring(&self, other: &Polynomial) {
        assert!(self.ring == other.ring, "polynomial ring mismatch");
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.assert_ring(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c);
        }
        out
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.assert_ring(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), &-c);
        }
        out
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.assert_ring(rhs);
        let mut out = self.ring.zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), &(ca * cb));
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial { (&self).$m(&rhs) }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: &Polynomial) -> Polynomial { (&self).$m(rhs) }
        }
        impl $tr<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&Scalar::from_int(-1))
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

fn fmt_monomial(m: &Monomial, vars: &[String], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let mut first = true;
    for (i, &e) in m.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        write!(f, "{}", vars[i])?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

/// Canonical text: terms in descending grevlex order, e.g.
/// `1/2*x^2 - 1/2*y^2 + 1/2`. Complex coefficients print as `(a+b*i)`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let vars = self.ring.vars();
        for (idx, (m, c)) in self.sorted_terms(MonomialOrder::Grevlex).into_iter().enumerate() {
            // pull a leading minus sign out of real and purely imaginary coefficients
            let negative = if c.is_real() { c.re().is_negative() } else { c.re().is_zero() && c.im().is_negative() };
            let mag = if negative { -c } else { c.clone() };
            match (idx, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let complex = !mag.is_real() && !mag.re().is_zero();
            if m.is_one() {
                if complex {
                    write!(f, "({mag})")?;
                } else {
                    write!(f, "{mag}")?;
                }
            } else {
                if complex {
                    write!(f, "({mag})*")?;
                } else if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                fmt_monomial(m, vars, f)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy() -> (Ring, Polynomial, Polynomial) {
        let r = Ring::rational(["x", "y"]);
        let (x, y) = (r.var(0), r.var(1));
        (r, x, y)
    }

    #[test]
    fn leading_form_examples() {
        let (r, x, y) = xy();
        let one = r.one();
        assert_eq!((&x * &x - &y).leading_form().unwrap(), &x * &x);
        let circle = &x * &x + &y * &y - &one;
        assert_eq!(circle.leading_form().unwrap(), &x * &x + &y * &y);
        let lin = x.scale(&3.into()) + y.scale(&2.into()) + one;
        assert_eq!(lin.leading_form().unwrap(), x.scale(&3.into()) + y.scale(&2.into()));
        assert_eq!(r.zero().leading_form(), Err(Error::ZeroPolynomial("leading form")));
    }

    #[test]
    fn homogeneous_components() {
        let (r, x, _) = xy();
        let p = &x * &x + &x + r.constant(3.into());
        assert_eq!(p.homogeneous_component(1), x);
        assert_eq!(p.homogeneous_component(0), r.constant(3.into()));
        assert!(p.homogeneous_component(5).is_zero());
    }

    #[test]
    fn evaluate_examples() {
        let (r, x, y) = xy();
        let p = &x * &x - &y;
        assert_eq!(p.evaluate(&[1.into(), 1.into()]).unwrap(), Scalar::zero());
        assert_eq!((&x * &y).evaluate(&[0.into(), 5.into()]).unwrap(), Scalar::zero());
        let q = Ring::new(["x", "y"], Field::GaussianRational);
        let z = q.var(0) + q.var(1).scale(&Scalar::i());
        let val = z.evaluate(&[1.into(), 1.into()]).unwrap();
        assert_eq!(val, Scalar::one() + Scalar::i());
        assert!(matches!(p.evaluate(&[1.into()]), Err(Error::DimensionMismatch { .. })));
        assert!(r.zero().evaluate(&[0.into(), 0.into()]).unwrap().is_zero());
    }

    #[test]
    fn canonical_printing() {
        let (r, x, y) = xy();
        let half = Scalar::ratio(1, 2);
        let f = (&x * &x).scale(&half) - (&y * &y).scale(&half) + r.constant(half.clone());
        assert_eq!(f.to_string(), "1/2*x^2 - 1/2*y^2 + 1/2");
        assert_eq!((-&x * &y).to_string(), "-x*y");
        assert_eq!(r.zero().to_string(), "0");
        let q = Ring::new(["x"], Field::GaussianRational);
        let c = Scalar::one() + Scalar::i().scale_int(2);
        assert_eq!(q.var(0).scale(&c).to_string(), "(1+2*i)*x");
        assert_eq!(q.var(0).scale(&-Scalar::i()).to_string(), "-i*x");
    }

    trait ScaleInt {
        fn scale_int(&self, n: i64) -> Scalar;
    }
    impl ScaleInt for Scalar {
        fn scale_int(&self, n: i64) -> Scalar {
            self * &Scalar::from_int(n)
        }
    }
}
