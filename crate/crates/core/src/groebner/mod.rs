//! Multivariate division, Buchberger's algorithm with cofactor tracking and
//! certified ideal membership.
//!
//! Every basis element remembers how it was built from the original
//! generators, so a zero normal form immediately yields a [`Certificate`].

mod certificate;
mod sorted;

use std::collections::HashSet;

use num_traits::One;

pub use certificate::Certificate;
pub(crate) use sorted::SortedPoly;

use crate::error::{Error, Result};
use crate::polyring::{Monomial, MonomialOrder, Polynomial, Ring, Scalar};

/// Outcome of [`multivariate_divide`]: `p = Σ quotients[i]·divisors[i] + remainder`.
#[derive(Clone, Debug, PartialEq)]
pub struct DivisionResult {
    pub quotients: Vec<Polynomial>,
    pub remainder: Polynomial,
}

/// Division of `p` by an ordered list of divisors. At each step the leading
/// term of the running dividend is cancelled by the first divisor whose
/// leading monomial divides it, or else moved to the remainder.
pub fn multivariate_divide(p: &Polynomial, divisors: &[Polynomial], order: MonomialOrder) -> Result<DivisionResult> {
    check_order(order, p.ring())?;
    for d in divisors {
        p.check_ring(d)?;
        if d.is_zero() {
            return Err(Error::ZeroDivisor);
        }
    }
    let ring = p.ring();
    let sorted: Vec<SortedPoly> = divisors.iter().map(|d| SortedPoly::from_poly(d, order)).collect();
    let mut quotients = vec![ring.zero(); divisors.len()];
    let mut work = SortedPoly::from_poly(p, order);
    let mut remainder = ring.zero();
    while let Some((m, c)) = work.lead().cloned() {
        let hit = sorted.iter().enumerate().find_map(|(i, d)| {
            let (lm, lc) = d.lead().expect("nonzero divisor");
            lm.quotient(&m).map(|q| (i, q, &c / lc))
        });
        match hit {
            Some((i, q, coef)) => {
                quotients[i].add_term(q.clone(), &coef);
                work = work.sub_scaled(&coef, &q, &sorted[i], order);
            }
            None => {
                remainder.add_term(m, &c);
                work.terms.pop();
            }
        }
    }
    Ok(DivisionResult { quotients, remainder })
}

fn check_order(order: MonomialOrder, ring: &Ring) -> Result<()> {
    match order {
        MonomialOrder::Block(k) if k > ring.nvars() => Err(Error::InvalidOrder(order.to_string(), ring.nvars())),
        _ => Ok(()),
    }
}

/// Reduced Gröbner basis together with, when tracked, the expression of each
/// element in terms of the original generators:
/// `elements[i] = Σ_j expressions[i][j]·generators[j]`.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ring: Ring,
    order: MonomialOrder,
    generators: Vec<Polynomial>,
    elements: Vec<Polynomial>,
    expressions: Option<Vec<Vec<Polynomial>>>,
    sorted: Vec<SortedPoly>,
}

#[derive(Clone)]
struct Elem {
    poly: SortedPoly,
    expr: Option<Vec<Polynomial>>,
}

impl Elem {
    fn lm(&self) -> &Monomial {
        &self.poly.lead().expect("basis elements are nonzero").0
    }
}

fn sub_expr(expr: &mut Option<Vec<Polynomial>>, c: &Scalar, m: &Monomial, other: &Option<Vec<Polynomial>>) {
    if let (Some(e), Some(o)) = (expr.as_mut(), other.as_ref()) {
        for (a, b) in e.iter_mut().zip(o) {
            if !b.is_zero() {
                *a = &*a - &b.mul_term(m, c);
            }
        }
    }
}

fn scale_expr(expr: &mut Option<Vec<Polynomial>>, c: &Scalar) {
    if let Some(e) = expr.as_mut() {
        for a in e.iter_mut() {
            *a = a.scale(c);
        }
    }
}

/// Fully reduce `work` by the monic elements of `basis` (except `skip`),
/// carrying its generator expression along. Returns the remainder, whose
/// expression is the updated `expr`.
fn reduce_full(
    mut work: SortedPoly,
    mut expr: Option<Vec<Polynomial>>,
    basis: &[Elem],
    skip: Option<usize>,
    order: MonomialOrder,
) -> (SortedPoly, Option<Vec<Polynomial>>) {
    let mut rem = Vec::new();
    while let Some((m, c)) = work.lead().cloned() {
        let hit = basis
            .iter()
            .enumerate()
            .filter(|(k, _)| Some(*k) != skip)
            .find_map(|(k, e)| e.lm().quotient(&m).map(|q| (k, q)));
        match hit {
            Some((k, q)) => {
                work = work.sub_scaled(&c, &q, &basis[k].poly, order);
                sub_expr(&mut expr, &c, &q, &basis[k].expr);
            }
            None => {
                rem.push(work.terms.pop().expect("lead exists"));
            }
        }
    }
    rem.reverse();
    (SortedPoly { terms: rem }, expr)
}

fn make_monic(poly: &mut SortedPoly, expr: &mut Option<Vec<Polynomial>>) {
    let lc = poly.lead().expect("nonzero").1.clone();
    if !lc.is_one() {
        let inv = lc.inv().expect("nonzero");
        poly.scale(&inv);
        scale_expr(expr, &inv);
    }
}

/// Buchberger's algorithm. `track` controls whether generator expressions
/// are maintained. All-zero input yields the empty basis of the zero ideal.
pub(crate) fn compute(
    ring: &Ring,
    generators: &[Polynomial],
    order: MonomialOrder,
    track: bool,
) -> Result<GroebnerBasis> {
    check_order(order, ring)?;
    for g in generators {
        if g.ring() != ring {
            return Err(Error::RingMismatch);
        }
    }
    let n = generators.len();
    let unit_expr = |j: usize| -> Option<Vec<Polynomial>> {
        track.then(|| (0..n).map(|k| if k == j { ring.one() } else { ring.zero() }).collect())
    };

    let mut basis: Vec<Elem> = Vec::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    let mut unit: Option<Elem> = None;

    fn push(basis: &mut Vec<Elem>, pending: &mut HashSet<(usize, usize)>, e: Elem) {
        let idx = basis.len();
        for k in 0..idx {
            pending.insert((k, idx));
        }
        basis.push(e);
    }

    for (j, g) in generators.iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        let mut e = Elem { poly: SortedPoly::from_poly(g, order), expr: unit_expr(j) };
        make_monic(&mut e.poly, &mut e.expr);
        if e.lm().is_one() {
            unit = Some(e);
            break;
        }
        push(&mut basis, &mut pending, e);
    }

    while unit.is_none() && !pending.is_empty() {
        // normal selection strategy: smallest lcm first
        let &(i, j) = pending
            .iter()
            .min_by(|a, b| {
                let la = basis[a.0].lm().lcm(basis[a.1].lm());
                let lb = basis[b.0].lm().lcm(basis[b.1].lm());
                order.cmp(&la, &lb).then(a.1.cmp(&b.1)).then(a.0.cmp(&b.0))
            })
            .expect("nonempty");
        pending.remove(&(i, j));
        let (lmi, lmj) = (basis[i].lm().clone(), basis[j].lm().clone());
        if lmi.is_coprime(&lmj) {
            continue;
        }
        let lcm = lmi.lcm(&lmj);
        let key = |a: usize, b: usize| (a.min(b), a.max(b));
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].lm().divides(&lcm)
                && !pending.contains(&key(i, k))
                && !pending.contains(&key(j, k))
        });
        if chain {
            continue;
        }
        let mi = lmi.quotient(&lcm).expect("lcm");
        let mj = lmj.quotient(&lcm).expect("lcm");
        let zero = SortedPoly { terms: Vec::new() };
        let s = zero.sub_scaled(&-Scalar::one(), &mi, &basis[i].poly, order).sub_scaled(
            &Scalar::one(),
            &mj,
            &basis[j].poly,
            order,
        );
        let mut expr = track.then(|| vec![ring.zero(); n]);
        sub_expr(&mut expr, &-Scalar::one(), &mi, &basis[i].expr);
        sub_expr(&mut expr, &Scalar::one(), &mj, &basis[j].expr);
        let (mut r, mut rexpr) = reduce_full(s, expr, &basis, None, order);
        if r.is_zero() {
            continue;
        }
        make_monic(&mut r, &mut rexpr);
        let e = Elem { poly: r, expr: rexpr };
        if e.lm().is_one() {
            unit = Some(e);
            break;
        }
        push(&mut basis, &mut pending, e);
    }

    let reduced: Vec<Elem> = match unit {
        Some(e) => vec![e],
        None => interreduce(basis, order),
    };

    let elements: Vec<Polynomial> = reduced.iter().map(|e| e.poly.to_poly(ring)).collect();
    let expressions = track.then(|| reduced.iter().map(|e| e.expr.clone().expect("tracked")).collect());
    let sorted = reduced.into_iter().map(|e| e.poly).collect();
    Ok(GroebnerBasis { ring: ring.clone(), order, generators: generators.to_vec(), elements, expressions, sorted })
}

/// Minimalize, then reduce every tail; result sorted by ascending leading monomial.
fn interreduce(basis: Vec<Elem>, order: MonomialOrder) -> Vec<Elem> {
    let keep: Vec<usize> = (0..basis.len())
        .filter(|&i| {
            !(0..basis.len())
                .any(|j| j != i && basis[j].lm().divides(basis[i].lm()) && (basis[j].lm() != basis[i].lm() || j < i))
        })
        .collect();
    let mut min: Vec<Elem> = keep.into_iter().map(|i| basis[i].clone()).collect();
    for i in 0..min.len() {
        let e = min[i].clone();
        let (poly, expr) = reduce_full(e.poly, e.expr, &min, Some(i), order);
        min[i] = Elem { poly, expr };
    }
    min.sort_by(|a, b| order.cmp(a.lm(), b.lm()));
    min
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    /// The generator list the basis was computed from.
    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    /// Reduced basis, monic, ascending by leading monomial.
    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn expressions(&self) -> Option<&[Vec<Polynomial>]> {
        self.expressions.as_deref()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.sorted.iter().map(|s| s.lead().expect("nonzero").0.clone()).collect()
    }

    /// Basis of the whole ring, `{1}`.
    pub fn is_unit(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_one()
    }

    /// Basis of the zero ideal (no elements).
    pub fn is_zero_ideal(&self) -> bool {
        self.elements.is_empty()
    }

    fn as_elems(&self) -> Vec<Elem> {
        let exprs = self.expressions.clone();
        self.sorted
            .iter()
            .enumerate()
            .map(|(i, s)| Elem { poly: s.clone(), expr: exprs.as_ref().map(|e| e[i].clone()) })
            .collect()
    }

    /// Unique remainder of `p` modulo the ideal.
    pub fn normal_form(&self, p: &Polynomial) -> Result<Polynomial> {
        if p.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        let elems: Vec<Elem> = self.sorted.iter().map(|s| Elem { poly: s.clone(), expr: None }).collect();
        let (r, _) = reduce_full(SortedPoly::from_poly(p, self.order), None, &elems, None, self.order);
        Ok(r.to_poly(&self.ring))
    }

    pub fn contains(&self, p: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(p)?.is_zero())
    }

    /// Membership certificate over the original generators, `None` when `p`
    /// is not in the ideal. Panics if the basis was computed without
    /// expression tracking.
    pub fn certificate(&self, p: &Polynomial) -> Result<Option<Certificate>> {
        if p.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        assert!(self.expressions.is_some(), "certificate requested from an untracked basis");
        let n = self.generators.len();
        let start = Some(vec![self.ring.zero(); n]);
        let (r, expr) = reduce_full(SortedPoly::from_poly(p, self.order), start, &self.as_elems(), None, self.order);
        if !r.is_zero() {
            return Ok(None);
        }
        // reduce_full accumulated minus the subtracted combination
        let cofactors = expr.expect("tracked").into_iter().map(|c| -c).collect();
        Ok(Some(Certificate::new(p.clone(), self.generators.clone(), cofactors)))
    }
}

/// Reduced Gröbner basis of the ideal generated by `generators`, with the
/// expression of every element in terms of the generators.
pub fn buchberger_reduced(generators: &[Polynomial], order: MonomialOrder) -> Result<GroebnerBasis> {
    let first = generators.iter().find(|g| !g.is_zero()).ok_or(Error::EmptyGenerators)?;
    compute(&first.ring().clone(), generators, order, true)
}

/// Normal form of `p` modulo a Gröbner basis.
pub fn normal_form(p: &Polynomial, gb: &GroebnerBasis) -> Result<Polynomial> {
    gb.normal_form(p)
}

/// Certified membership of `p` in `⟨generators⟩`. An empty or all-zero
/// generator list is the zero ideal, containing only `0`.
pub fn ideal_member(p: &Polynomial, generators: &[Polynomial]) -> Result<Option<Certificate>> {
    let gb = compute(p.ring(), generators, MonomialOrder::Grevlex, true)?;
    gb.certificate(p)
}

/// Certificate of `1 ∈ ⟨generators⟩`, present iff the ideal is the whole
/// ring (empty variety over ℂ).
pub fn express_one(generators: &[Polynomial]) -> Result<Option<Certificate>> {
    let first = generators.first().ok_or(Error::EmptyGenerators)?;
    ideal_member(&first.ring().one(), generators)
}
