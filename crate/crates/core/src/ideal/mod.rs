//! Ideals and the ideal-level operations the interpolation solvers need:
//! sums, intersections, radical membership, zero-dimensionality and the
//! radical of a zero-dimensional ideal.
//!
//! Varieties are always represented by ideals the caller supplies. An ideal
//! meant as `J(𝒱)` is assumed to be radical; nothing here computes `J(𝒱)`
//! from a point set.

mod univariate;

use std::fmt;
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::groebner::{self, Certificate, GroebnerBasis};
use crate::polyring::{Monomial, MonomialOrder, Polynomial, Ring};
use univariate::Univariate;

/// Name of the auxiliary variable used by elimination constructions.
pub const AUX_VAR: &str = "_t";

/// Polynomial ideal given by generators. Reduced bases are computed on
/// demand, once per monomial order, and never change afterwards.
pub struct Ideal {
    ring: Ring,
    generators: Vec<Polynomial>,
    cache: Mutex<Vec<(MonomialOrder, Arc<GroebnerBasis>)>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        Ideal {
            ring: self.ring.clone(),
            generators: self.generators.clone(),
            cache: Mutex::new(self.cache.lock().expect("cache lock").clone()),
        }
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{self}")
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_generators(f, &self.generators)
    }
}

pub(crate) fn write_generators(f: &mut fmt::Formatter<'_>, gens: &[Polynomial]) -> fmt::Result {
    write!(f, "<")?;
    for (i, g) in gens.iter().enumerate() {
        if i > 0 {
            write!(f, ", ")?;
        }
        write!(f, "{g}")?;
    }
    write!(f, ">")
}

impl Ideal {
    pub fn new(ring: &Ring, generators: Vec<Polynomial>) -> Result<Ideal> {
        if generators.iter().any(|g| g.ring() != ring) {
            return Err(Error::RingMismatch);
        }
        Ok(Ideal { ring: ring.clone(), generators, cache: Mutex::new(Vec::new()) })
    }

    /// Ideal generated by polynomials that share a ring. Panics on an empty list.
    pub fn from_generators(generators: Vec<Polynomial>) -> Result<Ideal> {
        let ring = generators.first().expect("at least one generator").ring().clone();
        Ideal::new(&ring, generators)
    }

    pub fn zero(ring: &Ring) -> Ideal {
        Ideal { ring: ring.clone(), generators: Vec::new(), cache: Mutex::new(Vec::new()) }
    }

    pub fn unit(ring: &Ring) -> Ideal {
        Ideal::new(ring, vec![ring.one()]).expect("same ring")
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    /// Reduced Gröbner basis (with generator expressions) under `order`.
    pub fn groebner(&self, order: MonomialOrder) -> Result<Arc<GroebnerBasis>> {
        if let Some((_, gb)) = self.cache.lock().expect("cache lock").iter().find(|(o, _)| *o == order) {
            return Ok(gb.clone());
        }
        let gb = Arc::new(groebner::compute(&self.ring, &self.generators, order, true)?);
        let mut cache = self.cache.lock().expect("cache lock");
        // a concurrent caller may have filled the slot; both results are identical
        if let Some((_, existing)) = cache.iter().find(|(o, _)| *o == order) {
            return Ok(existing.clone());
        }
        cache.push((order, gb.clone()));
        Ok(gb)
    }

    /// Reduced grevlex basis.
    pub fn basis(&self) -> Arc<GroebnerBasis> {
        self.groebner(MonomialOrder::Grevlex).expect("grevlex is defined for every ring")
    }

    pub fn contains(&self, p: &Polynomial) -> Result<bool> {
        self.basis().contains(p)
    }

    /// Certified membership over this ideal's generators.
    pub fn member(&self, p: &Polynomial) -> Result<Option<Certificate>> {
        self.basis().certificate(p)
    }

    pub fn is_unit(&self) -> bool {
        self.basis().is_unit()
    }

    pub fn is_zero(&self) -> bool {
        self.generators.iter().all(Polynomial::is_zero)
    }

    /// The ideal re-presented by its reduced grevlex basis.
    pub fn canonical(&self) -> Ideal {
        Ideal::new(&self.ring, self.basis().elements().to_vec()).expect("same ring")
    }
}

fn check_same_ring(a: &Ideal, b: &Ideal) -> Result<()> {
    if a.ring == b.ring {
        Ok(())
    } else {
        Err(Error::RingMismatch)
    }
}

/// `J₁ + J₂`, generated by the concatenated generator lists.
pub fn ideal_sum(j1: &Ideal, j2: &Ideal) -> Result<Ideal> {
    check_same_ring(j1, j2)?;
    let gens = j1.generators.iter().chain(&j2.generators).cloned().collect();
    Ideal::new(&j1.ring, gens)
}

/// `J₁ ∩ J₂` via `t·J₁ + (1 − t)·J₂` with `t` eliminated.
pub fn ideal_intersection(j1: &Ideal, j2: &Ideal) -> Result<Ideal> {
    check_same_ring(j1, j2)?;
    let ring = &j1.ring;
    if j1.is_zero() || j2.is_zero() {
        return Ok(Ideal::zero(ring));
    }
    if j1.is_unit() {
        return Ok(j2.canonical());
    }
    if j2.is_unit() {
        return Ok(j1.canonical());
    }
    // t goes first so the block order on one variable eliminates it
    let mut names = vec![AUX_VAR.to_string()];
    names.extend(ring.vars().iter().cloned());
    let ext = Ring::new(names, ring.field());
    let shift: Vec<usize> = (1..=ring.nvars()).collect();
    let t = ext.var(0);
    let one_minus_t = &ext.one() - &t;
    let gens: Vec<Polynomial> = j1
        .generators
        .iter()
        .map(|g| &t * &g.remap(&ext, &shift))
        .chain(j2.generators.iter().map(|g| &one_minus_t * &g.remap(&ext, &shift)))
        .collect();
    let gb = groebner::compute(&ext, &gens, MonomialOrder::Block(1), false)?;
    let out: Vec<Polynomial> =
        gb.elements().iter().filter(|g| g.degree_in(0) == Some(0)).map(|g| drop_first_variable(g, ring)).collect();
    let result = Ideal::new(ring, out)?;
    for g in result.generators() {
        assert!(j1.contains(g)? && j2.contains(g)?, "intersection generator {g} failed two-sided membership");
    }
    Ok(result)
}

fn drop_first_variable(p: &Polynomial, ring: &Ring) -> Polynomial {
    Polynomial::from_terms(ring, p.terms().map(|(m, c)| (Monomial::new(m.exponents()[1..].to_vec()), c.clone())))
}

/// Intersection of a nonempty list of ideals, folded left to right.
pub fn intersect_all(ideals: &[&Ideal]) -> Result<Ideal> {
    let (first, rest) = ideals.split_first().expect("at least one ideal");
    let mut acc = (*first).clone();
    for j in rest {
        acc = ideal_intersection(&acc, j)?;
    }
    Ok(acc)
}

/// Whether some power of `p` lies in `J`, i.e. `p` vanishes on `𝒱(J)`.
/// Decided by `1 ∈ J + ⟨1 − t·p⟩` with `t` appended as the last variable.
pub fn radical_member(p: &Polynomial, j: &Ideal) -> Result<bool> {
    if p.ring() != &j.ring {
        return Err(Error::RingMismatch);
    }
    let ext = j.ring.extend([AUX_VAR]);
    let t = ext.var(j.ring.nvars());
    let mut gens: Vec<Polynomial> = j.generators.iter().map(|g| g.embed(&ext)).collect();
    gens.push(&ext.one() - &(&t * &p.embed(&ext)));
    Ok(groebner::compute(&ext, &gens, MonomialOrder::Grevlex, false)?.is_unit())
}

/// True iff every variable has a pure power among the leading monomials of
/// the reduced grevlex basis (finitely many points, possibly none).
pub fn is_zero_dimensional(j: &Ideal) -> bool {
    let gb = j.basis();
    if gb.is_zero_ideal() {
        return j.ring.nvars() == 0;
    }
    let lms = gb.leading_monomials();
    (0..j.ring.nvars()).all(|i| lms.iter().any(|m| m.is_pure_power_of(i)))
}

/// Monic generator of `J ∩ 𝕜[x_var]`, computed from a lex basis with `x_var`
/// ranked last. Requires a zero-dimensional, proper `J`.
fn minimal_polynomial(j: &Ideal, var: usize) -> Result<Polynomial> {
    let ring = &j.ring;
    let n = ring.nvars();
    // permutation: var -> last, others keep relative order
    let mut to_perm = vec![0usize; n];
    let mut names = Vec::with_capacity(n);
    for (pos, i) in (0..n).filter(|&i| i != var).enumerate() {
        to_perm[i] = pos;
        names.push(ring.vars()[i].clone());
    }
    to_perm[var] = n - 1;
    names.push(ring.vars()[var].clone());
    let perm_ring = Ring::new(names, ring.field());
    let gens: Vec<Polynomial> = j.generators.iter().map(|g| g.remap(&perm_ring, &to_perm)).collect();
    let gb = groebner::compute(&perm_ring, &gens, MonomialOrder::Lex, false)?;
    let elim = gb
        .elements()
        .iter()
        .find(|g| g.leading_monomial(MonomialOrder::Lex).is_some_and(|m| m.is_pure_power_of(n - 1)))
        .ok_or(Error::PositiveDimensional)?;
    let mut back = vec![0usize; n];
    for (i, &p) in to_perm.iter().enumerate() {
        back[p] = i;
    }
    Ok(elim.remap(ring, &back))
}

/// Radical of a zero-dimensional ideal: `J` plus the squarefree parts of the
/// minimal polynomials of all variables, repeated until nothing changes.
pub fn zero_dim_radical(j: &Ideal) -> Result<Ideal> {
    if !is_zero_dimensional(j) {
        return Err(Error::PositiveDimensional);
    }
    let mut current = j.canonical();
    loop {
        if current.is_unit() {
            return Ok(current);
        }
        let mut gens = current.generators.clone();
        for var in 0..j.ring.nvars() {
            let m = minimal_polynomial(&current, var)?;
            let sq = Univariate::from_poly(&m, var).squarefree_part();
            gens.push(sq.to_poly(&j.ring, var));
        }
        let next = Ideal::new(&j.ring, gens)?.canonical();
        if ideal_equal(&next, &current)? {
            return Ok(next);
        }
        current = next;
    }
}

/// Radicality of a zero-dimensional ideal; positive-dimensional input is
/// reported as [`Error::PositiveDimensional`].
pub fn is_radical(j: &Ideal) -> Result<bool> {
    ideal_equal(j, &zero_dim_radical(j)?)
}

/// Equality of ideals by comparing reduced grevlex bases.
pub fn ideal_equal(j1: &Ideal, j2: &Ideal) -> Result<bool> {
    check_same_ring(j1, j2)?;
    Ok(j1.basis().elements() == j2.basis().elements())
}

#[cfg(test)]
mod tests;
