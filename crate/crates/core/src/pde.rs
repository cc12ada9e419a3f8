//! Polynomial solutions of `L̄(D)f = 0` with prescribed values on `𝒱(q)`.
//!
//! For `L = q^` every polynomial `p` splits uniquely as `p = f + q·h` with
//! `L̄(D)f = 0`, and `f` is the interpolant of least degree. The default
//! path builds the split one homogeneous degree at a time from the Fischer
//! decomposition `𝓗_k = ker L̄(D)|𝓗_k ⊕ L·𝓗_{k−l}`. A user-supplied `L`
//! with the right lowest degree is handled by one joint linear solve after
//! a degree-bounded transversality check.

use std::collections::HashMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg;
use crate::polyring::{apply_diff_op, monomials_of_degree, Monomial, MonomialOrder, Polynomial, Ring, Scalar};

/// `ℂ_{≤n}[x]` with its monomial basis, largest grevlex monomial first.
#[derive(Clone, Debug)]
pub struct DegreeBoundedSpace {
    ring: Ring,
    bound: u32,
    basis: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl DegreeBoundedSpace {
    pub fn new(ring: &Ring, bound: u32) -> Self {
        let mut basis = Vec::new();
        for k in (0..=bound).rev() {
            let mut slice = monomials_of_degree(ring.nvars(), k);
            slice.sort_by(|a, b| MonomialOrder::Grevlex.cmp(b, a));
            basis.extend(slice);
        }
        let index = basis.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        DegreeBoundedSpace { ring: ring.clone(), bound, basis, index }
    }

    /// Homogeneous slice `𝓗_k[x]` as a space of its own.
    pub fn homogeneous(ring: &Ring, k: u32) -> Self {
        let mut basis = monomials_of_degree(ring.nvars(), k);
        basis.sort_by(|a, b| MonomialOrder::Grevlex.cmp(b, a));
        let index = basis.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        DegreeBoundedSpace { ring: ring.clone(), bound: k, basis, index }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of `p`; `None` if `p` has a term outside the space.
    pub fn coords(&self, p: &Polynomial) -> Option<Vec<Scalar>> {
        let mut v = vec![Scalar::zero(); self.dim()];
        for (m, c) in p.terms() {
            v[*self.index.get(m)?] = c.clone();
        }
        Some(v)
    }

    pub fn poly(&self, coords: &[Scalar]) -> Polynomial {
        assert_eq!(coords.len(), self.dim(), "coordinate vector length");
        Polynomial::from_terms(&self.ring, self.basis.iter().cloned().zip(coords.iter().cloned()))
    }

    /// Matrix (row-major, rows indexed by `target`) of a linear map given on
    /// the basis of `self`.
    fn matrix_of(&self, target: &DegreeBoundedSpace, map: impl Fn(&Polynomial) -> Polynomial) -> Vec<Vec<Scalar>> {
        let mut rows = vec![vec![Scalar::zero(); self.dim()]; target.dim()];
        for (j, m) in self.basis.iter().enumerate() {
            let image = map(&self.ring.monomial(m.clone(), Scalar::from_int(1)));
            let col = target.coords(&image).expect("image lies in the target space");
            for (row, c) in rows.iter_mut().zip(col) {
                row[j] = c;
            }
        }
        rows
    }
}

/// `dim ℂ_{≤n}[x]` in `d` variables, `C(n + d, d)`; zero for negative `n`.
pub fn space_dimension(nvars: usize, n: i64) -> usize {
    if n < 0 {
        return 0;
    }
    let n = n as usize;
    (1..=nvars).fold(1usize, |acc, i| acc * (n + i) / i)
}

fn nonzero_operator(l: &Polynomial) -> Result<()> {
    if l.is_zero() {
        Err(Error::ZeroPolynomial("differential operator"))
    } else {
        Ok(())
    }
}

/// Rank of `L(D)` acting on `ℂ_{≤n}[x]`.
pub fn operator_rank(l: &Polynomial, n: u32) -> Result<usize> {
    nonzero_operator(l)?;
    let space = DegreeBoundedSpace::new(l.ring(), n);
    let m = space.matrix_of(&space, |f| apply_diff_op(l, f).expect("same ring"));
    Ok(linalg::rank(&m, space.dim()))
}

/// Basis of `ker L(D) ∩ ℂ_{≤n}[x]` in reduced echelon form with respect to
/// the grevlex-descending monomial basis.
pub fn kernel_basis(l: &Polynomial, n: u32) -> Result<Vec<Polynomial>> {
    nonzero_operator(l)?;
    let space = DegreeBoundedSpace::new(l.ring(), n);
    let m = space.matrix_of(&space, |f| apply_diff_op(l, f).expect("same ring"));
    let kernel = linalg::nullspace(&m, space.dim());
    let echelon = linalg::rref(&kernel, space.dim());
    Ok(echelon.rows.iter().map(|v| space.poly(v)).collect())
}

/// Split of `p` against the modulus `q`: `p = f + q·h` with `L̄(D)f = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct FischerSplit {
    pub input: Polynomial,
    /// The interpolant `f`.
    pub kernel_part: Polynomial,
    pub cofactor: Polynomial,
    pub modulus: Polynomial,
    /// The operator `L`; the kernel condition is on `L̄(D)`.
    pub operator: Polynomial,
}

impl FischerSplit {
    /// Exact check of `p = f + q·h` and `L̄(D)f = 0`.
    pub fn verify(&self) -> bool {
        let recon = &self.kernel_part + &(&self.modulus * &self.cofactor);
        recon == self.input && apply_diff_op(&self.operator.conj(), &self.kernel_part).is_ok_and(|r| r.is_zero())
    }
}

/// `g = F + L·h` for homogeneous `g` of degree `k` and `L` of degree `l`,
/// with `L̄(D)F = 0` and `h ∈ 𝓗_{k−l}`, from `M·h = L̄(D)g` where
/// `M(h) = L̄(D)(L·h)`. For `k < l` the split is `(g, 0)`.
pub fn fischer_split_homogeneous(g: &Polynomial, l: &Polynomial) -> Result<(Polynomial, Polynomial)> {
    g.check_ring(l)?;
    nonzero_operator(l)?;
    if !g.is_homogeneous() || !l.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let ring = g.ring();
    let (Some(k), Some(deg_l)) = (g.degree(), l.degree()) else {
        return Ok((ring.zero(), ring.zero()));
    };
    if k < deg_l {
        return Ok((g.clone(), ring.zero()));
    }
    let lbar = l.conj();
    let domain = DegreeBoundedSpace::homogeneous(ring, k - deg_l);
    let m = domain.matrix_of(&domain, |h| apply_diff_op(&lbar, &(l * h)).expect("same ring"));
    let rhs = domain.coords(&apply_diff_op(&lbar, g)?).expect("homogeneous image");
    let h = linalg::solve(&m, domain.dim(), &rhs).expect("Fischer Gram matrix is invertible");
    let h = domain.poly(&h);
    Ok((g - &(l * &h), h))
}

/// Whether `ker L̄(D) ∩ q·ℂ_{≤n−deg q}[x] = {0}`, i.e. `h ↦ L̄(D)(q·h)` is
/// injective on `ℂ_{≤n−deg q}[x]`.
pub fn transversality_check(l: &Polynomial, q: &Polynomial, n: u32) -> Result<bool> {
    l.check_ring(q)?;
    nonzero_operator(l)?;
    let deg_q = q.degree().ok_or(Error::ZeroPolynomial("degree"))?;
    if n < deg_q {
        return Ok(true);
    }
    let lbar = l.conj();
    let domain = DegreeBoundedSpace::new(q.ring(), n - deg_q);
    let target = DegreeBoundedSpace::new(q.ring(), n);
    let m = domain.matrix_of(&target, |h| apply_diff_op(&lbar, &(q * h)).expect("same ring"));
    Ok(linalg::rank(&m, domain.dim()) == domain.dim())
}

fn modulus_degree(q: &Polynomial) -> Result<u32> {
    match q.degree() {
        Some(d) if d >= 1 => Ok(d),
        _ => Err(Error::ConstantModulus),
    }
}

/// The unique `f` with `L̄(D)f = 0` and `f − p ∈ ⟨q⟩`, where `L` defaults
/// to the leading form `q^`.
pub fn pde_interpolate(p: &Polynomial, q: &Polynomial, operator: Option<&Polynomial>) -> Result<FischerSplit> {
    p.check_ring(q)?;
    let l = modulus_degree(q)?;
    match operator {
        None => Ok(split_by_leading_form(p, q, l)),
        Some(op) => {
            op.check_ring(q)?;
            nonzero_operator(op)?;
            let low = op.lowest_degree().expect("nonzero");
            if low != l {
                return Err(Error::LowestDegreeMismatch { operator: low, modulus: l });
            }
            let n = p.degree().unwrap_or(0);
            if !transversality_check(op, q, n)? {
                return Err(Error::TransversalityFailure(n));
            }
            Ok(split_joint(p, q, op, l, n))
        }
    }
}

fn split_by_leading_form(p: &Polynomial, q: &Polynomial, l: u32) -> FischerSplit {
    let lead = q.leading_form().expect("nonzero modulus");
    let ring = p.ring();
    let mut rest = p.clone();
    let mut h = ring.zero();
    for k in (l..=p.degree().unwrap_or(0)).rev() {
        let g = rest.homogeneous_component(k);
        let (_, hk) = fischer_split_homogeneous(&g, &lead).expect("homogeneous inputs");
        // q·h_k agrees with lead·h_k in degree k and only touches lower degrees otherwise
        rest = rest - q * &hk;
        h = h + hk;
    }
    FischerSplit { input: p.clone(), kernel_part: rest, cofactor: h, modulus: q.clone(), operator: lead }
}

fn split_joint(p: &Polynomial, q: &Polynomial, op: &Polynomial, l: u32, n: u32) -> FischerSplit {
    let ring = p.ring();
    if n < l {
        return FischerSplit {
            input: p.clone(),
            kernel_part: p.clone(),
            cofactor: ring.zero(),
            modulus: q.clone(),
            operator: op.clone(),
        };
    }
    let kernel = kernel_basis(&op.conj(), n).expect("nonzero operator");
    let multipliers = DegreeBoundedSpace::new(ring, n - l);
    let space = DegreeBoundedSpace::new(ring, n);
    let columns: Vec<Polynomial> = kernel
        .iter()
        .cloned()
        .chain(multipliers.basis().iter().map(|m| q * &ring.monomial(m.clone(), Scalar::from_int(1))))
        .collect();
    let mut matrix = vec![vec![Scalar::zero(); columns.len()]; space.dim()];
    for (j, c) in columns.iter().enumerate() {
        for (row, v) in matrix.iter_mut().zip(space.coords(c).expect("degree at most n")) {
            row[j] = v;
        }
    }
    let rhs = space.coords(p).expect("degree at most n");
    let x = linalg::solve(&matrix, columns.len(), &rhs).expect("transversal direct sum spans the space");
    let kernel_part = kernel.iter().zip(&x).fold(ring.zero(), |acc, (k, c)| acc + k.scale(c));
    let cofactor = multipliers.poly(&x[kernel.len()..]);
    FischerSplit { input: p.clone(), kernel_part, cofactor, modulus: q.clone(), operator: op.clone() }
}

/// Harmonic interpolant of `p` on a quadric whose leading form is
/// `x₁² + ⋯ + x_d²`.
pub fn harmonic_interpolate(p: &Polynomial, quadric: &Polynomial) -> Result<FischerSplit> {
    p.check_ring(quadric)?;
    let ring = quadric.ring();
    let laplace = (0..ring.nvars()).fold(ring.zero(), |acc, i| acc + ring.var(i).pow(2));
    if quadric.is_zero() || quadric.leading_form()? != laplace {
        return Err(Error::LeadingFormMismatch);
    }
    pde_interpolate(p, quadric, None)
}

#[cfg(test)]
mod tests;
