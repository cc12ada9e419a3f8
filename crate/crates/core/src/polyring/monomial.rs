use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

/// Exponent vector `α` of the monomial `x^α`.
///
/// The derived `Ord` is plain lexicographic comparison of the exponent
/// vectors; it is only used as a storage key. Term orders live in
/// [`MonomialOrder`](super::MonomialOrder).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut e = vec![0; nvars];
        e[index] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    /// Total degree `|α|`.
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// `α! = α₁!·…·α_d!`
    pub fn factorial(&self) -> BigInt {
        self.0.iter().flat_map(|&e| 1..=e).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient(&self, other: &Monomial) -> Option<Monomial> {
        self.divides(other).then(|| Monomial(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect()))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Indices of the variables that occur.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }

    /// Pure power of a single variable (or 1): support is a subset of `{index}`.
    pub fn is_pure_power_of(&self, index: usize) -> bool {
        self.support().all(|i| i == index)
    }

    /// Apply `D^self` to `x^target`: returns the falling-factorial coefficient
    /// and resulting monomial, or `None` when the derivative vanishes.
    pub fn differentiate(&self, target: &Monomial) -> Option<(BigInt, Monomial)> {
        let rest = self.quotient(target)?;
        let mut coeff = BigInt::one();
        for (&t, &o) in target.0.iter().zip(&self.0) {
            for k in 0..o {
                coeff *= BigInt::from(t - k);
            }
        }
        Some((coeff, rest))
    }

    /// Exponent vector re-indexed by `map`: new position `map[i]` receives `α_i`.
    pub fn remap(&self, map: &[usize], nvars: usize) -> Monomial {
        let mut e = vec![0; nvars];
        for (i, &a) in self.0.iter().enumerate() {
            e[map[i]] += a;
        }
        Monomial(e)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x^{:?}", self.0)
    }
}

/// All monomials of total degree exactly `degree` in `nvars` variables,
/// in lexicographically descending order of the exponent vectors.
pub fn monomials_of_degree(nvars: usize, degree: u32) -> Vec<Monomial> {
    fn rec(nvars: usize, left: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == nvars {
            prefix.push(left);
            out.push(Monomial(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in (0..=left).rev() {
            prefix.push(e);
            rec(nvars, left - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if nvars == 0 {
        if degree == 0 {
            out.push(Monomial(Vec::new()));
        }
        return out;
    }
    rec(nvars, degree, &mut Vec::with_capacity(nvars), &mut out);
    out
}
