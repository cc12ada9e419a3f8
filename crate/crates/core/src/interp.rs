//! Interpolation of polynomial data prescribed on several varieties.
//!
//! Each variety `𝒱(J_k)` carries a datum `p_k`; an interpolant is a single
//! polynomial `f` with `f − p_k ∈ J_k` for every `k`. Every feasible result
//! carries one [`Certificate`] per variety proving exactly that.
//!
//! Interpolants are returned in a canonical form: with `I = ∩ J_k`, the
//! solver replaces `f` by `p₁ + NF(f − p₁, I)`. Any two interpolants differ
//! by an element of `I`, so the output does not depend on the particular
//! cofactors Buchberger's algorithm happened to produce.

use std::fmt;

use crate::error::{Error, Result};
use crate::groebner::{ideal_member, Certificate};
use crate::ideal::{ideal_sum, intersect_all, is_radical, is_zero_dimensional, radical_member, Ideal};
use crate::polyring::{Polynomial, Ring, Scalar};

/// Data `p₁,…,p_n` on varieties given by ideals `J₁,…,J_n`.
#[derive(Clone, Debug)]
pub struct InterpolationProblem {
    ideals: Vec<Ideal>,
    data: Vec<Polynomial>,
}

impl InterpolationProblem {
    pub fn new(ideals: Vec<Ideal>, data: Vec<Polynomial>) -> Result<Self> {
        if ideals.is_empty() {
            return Err(Error::InvalidProblem("at least one variety is required".into()));
        }
        if ideals.len() != data.len() {
            return Err(Error::InvalidProblem(format!("{} ideals but {} data", ideals.len(), data.len())));
        }
        let ring = ideals[0].ring();
        if ideals.iter().any(|j| j.ring() != ring) || data.iter().any(|p| p.ring() != ring) {
            return Err(Error::RingMismatch);
        }
        Ok(InterpolationProblem { ideals, data })
    }

    pub fn ring(&self) -> &Ring {
        self.ideals[0].ring()
    }

    pub fn ideals(&self) -> &[Ideal] {
        &self.ideals
    }

    pub fn data(&self) -> &[Polynomial] {
        &self.data
    }

    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Feasible,
    Infeasible,
    /// A sufficient condition failed; feasibility was not decided.
    Undecided,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Feasible => "feasible",
            Status::Infeasible => "infeasible",
            Status::Undecided => "undecided",
        })
    }
}

/// A failed membership test: `difference ∉ ⟨ideal⟩`.
#[derive(Clone, Debug, PartialEq)]
pub struct Witness {
    /// Zero-based variety indices. For sequential runs the first index is
    /// the last variety already merged into the running union.
    pub pair: (usize, usize),
    pub difference: Polynomial,
    /// Reduced grevlex basis of the ideal tested, largest leading monomial first.
    pub ideal: Vec<Polynomial>,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ∉ ", self.difference)?;
        crate::ideal::write_generators(f, &self.ideal)
    }
}

/// Radicality of a running sum ideal `U_m + J_{m+1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Radicality {
    Radical,
    NotRadical,
    /// Not zero-dimensional; only the data-level membership decides.
    Undecided,
}

#[derive(Clone, Debug)]
pub struct InterpolationResult {
    pub status: Status,
    pub interpolant: Option<Polynomial>,
    /// One certificate of `f − p_k ∈ J_k` per variety, when feasible.
    pub certificates: Vec<Certificate>,
    /// Failed tests; restricted mode lists every failing pair.
    pub witnesses: Vec<Witness>,
    /// Sequential mode: verdict for each merge step.
    pub radicality: Vec<Radicality>,
}

impl InterpolationResult {
    fn feasible(f: Polynomial, certificates: Vec<Certificate>) -> Self {
        InterpolationResult {
            status: Status::Feasible,
            interpolant: Some(f),
            certificates,
            witnesses: Vec::new(),
            radicality: Vec::new(),
        }
    }

    fn failed(status: Status, witnesses: Vec<Witness>) -> Self {
        InterpolationResult { status, interpolant: None, certificates: Vec::new(), witnesses, radicality: Vec::new() }
    }

    pub fn is_feasible(&self) -> bool {
        self.status == Status::Feasible
    }

    /// Whether every attached certificate expands to its target.
    pub fn verify(&self) -> bool {
        self.certificates.iter().all(Certificate::verify)
    }
}

/// Membership of `target = g₁ + g₂` in `J₁ + J₂`, regrouped by the ideal
/// each generator came from; returns `g₂` with its cofactors over `J₂`. A
/// generator of `J₂` already listed in `J₁` is attributed to `J₁`.
fn split_member(target: &Polynomial, j1: &Ideal, j2: &Ideal) -> Result<Option<Certificate>> {
    let mut gens: Vec<Polynomial> = j1.generators().to_vec();
    let n1 = gens.len();
    let mut slot = Vec::with_capacity(j2.generators().len());
    for g in j2.generators() {
        if gens[..n1].contains(g) {
            slot.push(None);
        } else {
            slot.push(Some(gens.len()));
            gens.push(g.clone());
        }
    }
    let Some(cert) = ideal_member(target, &gens)? else {
        return Ok(None);
    };
    let c1 = cert.cofactors[..n1].to_vec();
    let c2: Vec<Polynomial> =
        slot.iter().map(|s| s.map_or_else(|| target.ring().zero(), |i| cert.cofactors[i].clone())).collect();
    let g2 = Certificate::new(target.ring().zero(), j2.generators().to_vec(), c2);
    let g2 = Certificate { target: g2.expand(), ..g2 };
    debug_assert!({
        let g1 = Certificate::new(target.ring().zero(), j1.generators().to_vec(), c1);
        &(&g1.expand() + &g2.target) == target
    });
    Ok(Some(g2))
}

fn sum_basis(j1: &Ideal, j2: &Ideal) -> Result<Vec<Polynomial>> {
    let mut b = ideal_sum(j1, j2)?.basis().elements().to_vec();
    b.reverse();
    Ok(b)
}

fn certify_all(f: &Polynomial, problem: &InterpolationProblem) -> Result<Vec<Certificate>> {
    problem
        .ideals
        .iter()
        .zip(&problem.data)
        .map(|(j, p)| Ok(j.member(&(f - p))?.expect("interpolant satisfies every condition")))
        .collect()
}

/// Canonical representative `p₁ + NF(f − p₁, ∩J_k)`, plus its certificates.
fn finish(f: Polynomial, problem: &InterpolationProblem, union: Option<Ideal>) -> Result<InterpolationResult> {
    let union = match union {
        Some(u) => u,
        None => intersect_all(&problem.ideals.iter().collect::<Vec<_>>())?,
    };
    let anchor = &problem.data[0];
    let f = anchor + &union.basis().normal_form(&(&f - anchor))?;
    let certificates = certify_all(&f, problem)?;
    Ok(InterpolationResult::feasible(f, certificates))
}

/// Polynomial equal to 1 on `𝒱(J₁)` and 0 on `𝒱(J₂)`.
#[derive(Clone, Debug)]
pub struct Separator {
    pub polynomial: Polynomial,
    /// `f − 1 ∈ J₁`
    pub near: Certificate,
    /// `f ∈ J₂`
    pub far: Certificate,
}

/// Separator of two disjoint varieties, from a certificate of
/// `1 = g₁ + g₂ ∈ J₁ + J₂`: `f = g₂`, reduced modulo `J₁ ∩ J₂`.
pub fn separator(j1: &Ideal, j2: &Ideal) -> Result<Separator> {
    let ring = j1.ring();
    let split = split_member(&ring.one(), j1, j2)?.ok_or(Error::VarietiesIntersect(0, 1))?;
    let both = intersect_all(&[j1, j2])?;
    let f = both.basis().normal_form(&split.target)?;
    let near = j1.member(&(&f - &ring.one()))?.expect("separator is 1 on the first variety");
    let far = j2.member(&f)?.expect("separator vanishes on the second variety");
    Ok(Separator { polynomial: f, near, far })
}

/// Lagrange-type basis: `f_k` is 1 on `𝒱(J_k)` and 0 on every other variety.
#[derive(Clone, Debug)]
pub struct LagrangeBasis {
    pub elements: Vec<Polynomial>,
    /// `certificates[k][j]` proves `f_k − δ_kj ∈ J_j`.
    pub certificates: Vec<Vec<Certificate>>,
}

fn first_intersecting(ideals: &[Ideal], k: usize) -> Result<usize> {
    for (j, other) in ideals.iter().enumerate() {
        if j != k && !ideal_sum(&ideals[k], other)?.is_unit() {
            return Ok(j);
        }
    }
    unreachable!("some variety meets variety {k}")
}

pub fn lagrange_basis(ideals: &[Ideal]) -> Result<LagrangeBasis> {
    let first = ideals.first().ok_or_else(|| Error::InvalidProblem("no varieties".into()))?;
    if ideals.iter().any(|j| j.ring() != first.ring()) {
        return Err(Error::RingMismatch);
    }
    let ring = first.ring();
    if ideals.len() == 1 {
        let cert = first.member(&ring.zero())?.expect("0 is in every ideal");
        return Ok(LagrangeBasis { elements: vec![ring.one()], certificates: vec![vec![cert]] });
    }
    let all = intersect_all(&ideals.iter().collect::<Vec<_>>())?;
    let mut elements = Vec::with_capacity(ideals.len());
    for k in 0..ideals.len() {
        let others: Vec<&Ideal> = ideals.iter().enumerate().filter(|&(j, _)| j != k).map(|(_, j)| j).collect();
        let rest = intersect_all(&others)?;
        let Some(split) = split_member(&ring.one(), &ideals[k], &rest)? else {
            return Err(Error::VarietiesIntersect(k, first_intersecting(ideals, k)?));
        };
        elements.push(all.basis().normal_form(&split.target)?);
    }
    let certificates = elements
        .iter()
        .enumerate()
        .map(|(k, f)| {
            ideals
                .iter()
                .enumerate()
                .map(|(j, ideal)| {
                    let target = if j == k { f - &ring.one() } else { f.clone() };
                    Ok(ideal.member(&target)?.expect("Lagrange condition holds"))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(LagrangeBasis { elements, certificates })
}

/// `f = Σ p_k f_k` over a Lagrange basis; requires pairwise-disjoint varieties.
pub fn interpolate_disjoint(problem: &InterpolationProblem) -> Result<InterpolationResult> {
    let basis = lagrange_basis(&problem.ideals)?;
    let f = basis.elements.iter().zip(&problem.data).fold(problem.ring().zero(), |acc, (fk, p)| acc + fk * p);
    finish(f, problem, None)
}

/// Two varieties: feasible iff `p₁ − p₂ ∈ J₁ + J₂`; then `f = p₂ + g₂`
/// where `p₁ − p₂ = g₁ + g₂`.
pub fn interpolate_pair(j1: &Ideal, j2: &Ideal, p1: &Polynomial, p2: &Polynomial) -> Result<InterpolationResult> {
    let problem = InterpolationProblem::new(vec![j1.clone(), j2.clone()], vec![p1.clone(), p2.clone()])?;
    let diff = p1 - p2;
    match split_member(&diff, j1, j2)? {
        Some(split) => finish(p2 + &split.target, &problem, None),
        None => Ok(InterpolationResult::failed(
            Status::Infeasible,
            vec![Witness { pair: (0, 1), difference: diff, ideal: sum_basis(j1, j2)? }],
        )),
    }
}

fn radicality_of(j: &Ideal) -> Result<Radicality> {
    if !is_zero_dimensional(j) {
        return Ok(Radicality::Undecided);
    }
    Ok(if is_radical(j)? { Radicality::Radical } else { Radicality::NotRadical })
}

/// Merge varieties in input order, keeping a running interpolant `f_m` on
/// `U_m = J₁ ∩ … ∩ J_m` and solving the pair problem `(U_m, J_{m+1})`.
pub fn interpolate_sequential(problem: &InterpolationProblem) -> Result<InterpolationResult> {
    let mut f = problem.data[0].clone();
    let mut union = problem.ideals[0].clone();
    let mut radicality = Vec::with_capacity(problem.len() - 1);
    for m in 1..problem.len() {
        let (next, p) = (&problem.ideals[m], &problem.data[m]);
        radicality.push(radicality_of(&ideal_sum(&union, next)?)?);
        let diff = &f - p;
        let Some(split) = split_member(&diff, &union, next)? else {
            let witness = Witness { pair: (m - 1, m), difference: diff, ideal: sum_basis(&union, next)? };
            let mut result = InterpolationResult::failed(Status::Infeasible, vec![witness]);
            result.radicality = radicality;
            return Ok(result);
        };
        f = p + &split.target;
        union = crate::ideal::ideal_intersection(&union, next)?;
    }
    let mut result = finish(f, problem, Some(union))?;
    result.radicality = radicality;
    Ok(result)
}

/// Construction from the sufficient condition
/// `p_i − p_j ∈ J_i + ∩_{k≠i} J_k` for all `i, j`. When it fails the status
/// is [`Status::Undecided`] with every failing `(i, j)` as a witness.
pub fn interpolate_restricted(problem: &InterpolationProblem) -> Result<InterpolationResult> {
    let n = problem.len();
    if n < 2 {
        return Err(Error::InvalidProblem("restricted interpolation needs at least two varieties".into()));
    }
    let rests: Vec<Ideal> = (0..n)
        .map(|i| {
            let others: Vec<&Ideal> =
                problem.ideals.iter().enumerate().filter(|&(k, _)| k != i).map(|(_, j)| j).collect();
            intersect_all(&others)
        })
        .collect::<Result<_>>()?;
    let mut witnesses = Vec::new();
    for (i, rest) in rests.iter().enumerate() {
        let sum = ideal_sum(&problem.ideals[i], rest)?;
        for j in 0..n {
            let diff = &problem.data[i] - &problem.data[j];
            if j != i && !sum.contains(&diff)? {
                witnesses.push(Witness { pair: (i, j), difference: diff, ideal: sum_basis(&problem.ideals[i], rest)? });
            }
        }
    }
    if !witnesses.is_empty() {
        return Ok(InterpolationResult::failed(Status::Undecided, witnesses));
    }
    // characteristic zero: 1/n exists
    let inv_n = Scalar::from_int(n as i64).inv().expect("n > 0");
    let mean = problem.data.iter().fold(problem.ring().zero(), |acc, p| acc + p).scale(&inv_n);
    let mut f = mean.clone();
    for ((p, j), rest) in problem.data.iter().zip(&problem.ideals).zip(&rests) {
        let fi = p - &mean;
        let split = split_member(&fi, j, rest)?.expect("hypothesis verified above");
        f = f + &split.target;
    }
    finish(f, problem, None)
}

/// Whether `p_j − p_k` vanishes on `𝒱(J_j) ∩ 𝒱(J_k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairCompatibility {
    pub pair: (usize, usize),
    pub compatible: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompatibilityReport {
    pub pairs: Vec<PairCompatibility>,
}

impl CompatibilityReport {
    pub fn is_compatible(&self) -> bool {
        self.pairs.iter().all(|p| p.compatible)
    }
}

/// The necessary pointwise agreement condition on all pairwise
/// intersections, decided by radical membership in `J_j + J_k`.
pub fn compatibility_check(problem: &InterpolationProblem) -> Result<CompatibilityReport> {
    let n = problem.len();
    let mut pairs = Vec::new();
    for j in 0..n {
        for k in (j + 1)..n {
            let sum = ideal_sum(&problem.ideals[j], &problem.ideals[k])?;
            let compatible = radical_member(&(&problem.data[j] - &problem.data[k]), &sum)?;
            pairs.push(PairCompatibility { pair: (j, k), compatible });
        }
    }
    Ok(CompatibilityReport { pairs })
}
