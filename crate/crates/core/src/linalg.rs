//! Exact dense linear algebra over ℚ and ℚ(i).
//!
//! Rows are cleared of denominators into Gaussian integers and reduced by
//! fraction-free (Bareiss) elimination, where every intermediate division is
//! exact. Pivots are chosen at the lowest available row index, scanning
//! columns left to right, so echelon forms are reproducible. The final
//! back-substitution to reduced row echelon form happens over ℚ(i).

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::polyring::Scalar;

/// Gaussian integer `re + im·i`.
#[derive(Clone, Debug, PartialEq, Eq)]
struct GaussInt {
    re: BigInt,
    im: BigInt,
}

impl GaussInt {
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn mul(&self, o: &GaussInt) -> GaussInt {
        GaussInt { re: &self.re * &o.re - &self.im * &o.im, im: &self.re * &o.im + &self.im * &o.re }
    }

    fn sub(&self, o: &GaussInt) -> GaussInt {
        GaussInt { re: &self.re - &o.re, im: &self.im - &o.im }
    }

    /// `self / d`, which must be exact.
    fn div_exact(&self, d: &GaussInt) -> GaussInt {
        let norm = &d.re * &d.re + &d.im * &d.im;
        let re = &self.re * &d.re + &self.im * &d.im;
        let im = &self.im * &d.re - &self.re * &d.im;
        let (qr, rr) = re.div_rem(&norm);
        let (qi, ri) = im.div_rem(&norm);
        debug_assert!(rr.is_zero() && ri.is_zero(), "inexact Bareiss division");
        GaussInt { re: qr, im: qi }
    }

    fn to_scalar(&self) -> Scalar {
        Scalar::new(BigRational::from_integer(self.re.clone()), BigRational::from_integer(self.im.clone()))
    }
}

fn clear_row(row: &[Scalar]) -> Vec<GaussInt> {
    let l = row.iter().fold(BigInt::one(), |acc, s| acc.lcm(&s.denominator_lcm()));
    let l = BigRational::from_integer(l);
    row.iter()
        .map(|s| {
            let re = s.re() * &l;
            let im = s.im() * &l;
            GaussInt { re: re.to_integer(), im: im.to_integer() }
        })
        .collect()
}

/// Reduced row echelon form of a matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Rref {
    /// Nonzero rows, each with a unit pivot.
    pub rows: Vec<Vec<Scalar>>,
    /// Pivot column of each row, strictly increasing.
    pub pivots: Vec<usize>,
    pub ncols: usize,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Nullspace basis, one vector per free column, in reduced echelon form
    /// (each vector has a 1 at its free column and 0 at the other free columns).
    pub fn nullspace(&self) -> Vec<Vec<Scalar>> {
        let mut is_pivot = vec![false; self.ncols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ncols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![Scalar::zero(); self.ncols];
                v[free] = Scalar::one();
                for (row, &p) in self.rows.iter().zip(&self.pivots) {
                    v[p] = -row[free].clone();
                }
                v
            })
            .collect()
    }
}

/// Reduced row echelon form of `matrix`, whose rows all have length `ncols`.
pub fn rref(matrix: &[Vec<Scalar>], ncols: usize) -> Rref {
    let mut a: Vec<Vec<GaussInt>> = matrix
        .iter()
        .map(|r| {
            assert_eq!(r.len(), ncols, "ragged matrix");
            clear_row(r)
        })
        .collect();
    let nrows = a.len();
    let mut prev = GaussInt { re: BigInt::one(), im: BigInt::zero() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let (top, rest) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let pv = pivot_row[c].clone();
        for row in rest.iter_mut() {
            let f = row[c].clone();
            for j in c..ncols {
                let v = pv.mul(&row[j]).sub(&f.mul(&pivot_row[j]));
                row[j] = v.div_exact(&prev);
            }
        }
        prev = pv;
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    let mut rows: Vec<Vec<Scalar>> = a
        .iter()
        .zip(&pivots)
        .map(|(row, &p)| {
            let inv = row[p].to_scalar().inv().expect("nonzero pivot");
            row.iter().map(|x| if x.is_zero() { Scalar::zero() } else { &x.to_scalar() * &inv }).collect()
        })
        .collect();
    for k in (0..rows.len()).rev() {
        let p = pivots[k];
        let (upper, lower) = rows.split_at_mut(k);
        let pivot_row = &lower[0];
        for row in upper.iter_mut() {
            let f = row[p].clone();
            if f.is_zero() {
                continue;
            }
            for j in p..ncols {
                if !pivot_row[j].is_zero() {
                    let d = &f * &pivot_row[j];
                    row[j] -= &d;
                }
            }
        }
    }
    Rref { rows, pivots, ncols }
}

pub fn rank(matrix: &[Vec<Scalar>], ncols: usize) -> usize {
    rref(matrix, ncols).rank()
}

/// Nullspace basis of `matrix` in reduced echelon form.
pub fn nullspace(matrix: &[Vec<Scalar>], ncols: usize) -> Vec<Vec<Scalar>> {
    rref(matrix, ncols).nullspace()
}

/// A solution of `matrix · x = rhs` (free variables set to zero), or `None`
/// when the system is inconsistent.
pub fn solve(matrix: &[Vec<Scalar>], ncols: usize, rhs: &[Scalar]) -> Option<Vec<Scalar>> {
    assert_eq!(matrix.len(), rhs.len(), "right-hand side length");
    let augmented: Vec<Vec<Scalar>> = matrix
        .iter()
        .zip(rhs)
        .map(|(row, b)| row.iter().cloned().chain(std::iter::once(b.clone())).collect())
        .collect();
    let red = rref(&augmented, ncols + 1);
    if red.pivots.last() == Some(&ncols) {
        return None;
    }
    let mut x = vec![Scalar::zero(); ncols];
    for (row, &p) in red.rows.iter().zip(&red.pivots) {
        x[p] = row[ncols].clone();
    }
    Some(x)
}
