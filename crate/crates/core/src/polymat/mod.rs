//! Polynomial matrices and the Prover-side oracles built on them.
//!
//! The Verifier only ever touches [`PolyMat::eval`], [`toeplitz`] and the
//! local [`shape`] checks; everything else here (Bareiss rank, rational
//! solving, normal forms, kernel and saturation bases) is Prover or test
//! oracle machinery.

mod bareiss;
mod hermite;
mod kernel;
mod membership;
mod popov;
mod ratsolve;
pub mod shape;
pub mod toeplitz;

use std::fmt;

use rand::Rng;
use thiserror::Error;

use crate::ff::{FieldElement, Modulus};
use crate::matfield::FieldMat;
use crate::upoly::{Poly, PolyError, NEG_INF};

pub use bareiss::{bareiss, det_bareiss, rank_and_profile, BareissResult};
pub use hermite::hermite_form;
pub use kernel::{kernel_basis_left, right_kernel_basis, saturation_basis};
pub use membership::row_membership_oracle;
pub use popov::{popov_form, Shift};
pub use ratsolve::{rational_solve_left, RatSolve};
pub use shape::{check_hermite_shape, check_popov_shape, PivotProfile};
pub use toeplitz::Toeplitz;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyMatError {
    #[error("dimension mismatch: {0}")]
    DimMismatch(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("toeplitz spec has length {got}, expected {expected}")]
    LengthMismatch { got: usize, expected: usize },
}

/// A dense `m x n` matrix over `F[x]`, stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolyMat {
    m: usize,
    n: usize,
    p: Modulus,
    data: Vec<Poly>,
}

impl PolyMat {
    pub fn zero(p: Modulus, m: usize, n: usize) -> PolyMat {
        PolyMat { m, n, p, data: vec![Poly::zero(p); m * n] }
    }

    pub fn identity(p: Modulus, n: usize) -> PolyMat {
        let mut a = PolyMat::zero(p, n, n);
        for i in 0..n {
            a.set(i, i, Poly::one(p));
        }
        a
    }

    pub fn from_fn(p: Modulus, m: usize, n: usize, mut f: impl FnMut(usize, usize) -> Poly) -> PolyMat {
        let mut data = Vec::with_capacity(m * n);
        for i in 0..m {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        PolyMat { m, n, p, data }
    }

    /// Builds from explicit rows; `n` is needed for the `0`-row case.
    pub fn from_rows(p: Modulus, n: usize, rows: Vec<Vec<Poly>>) -> Result<PolyMat, PolyMatError> {
        if rows.iter().any(|r| r.len() != n) {
            return Err(PolyMatError::DimMismatch("ragged rows".into()));
        }
        let m = rows.len();
        Ok(PolyMat { m, n, p, data: rows.concat() })
    }

    /// Convenience constructor from signed coefficient lists, low-to-high.
    pub fn from_i64s(p: Modulus, rows: &[&[&[i64]]]) -> PolyMat {
        let n = rows.first().map_or(0, |r| r.len());
        let r = rows
            .iter()
            .map(|row| row.iter().map(|c| Poly::from_i64s(p, c)).collect())
            .collect();
        PolyMat::from_rows(p, n, r).expect("rectangular input")
    }

    pub fn from_field(a: &FieldMat) -> PolyMat {
        PolyMat::from_fn(a.modulus(), a.rows(), a.cols(), |i, j| Poly::constant(a.get(i, j)))
    }

    /// Uniformly random entries of degree at most `d`.
    pub fn random<R: Rng + ?Sized>(p: Modulus, m: usize, n: usize, d: usize, rng: &mut R) -> PolyMat {
        PolyMat::from_fn(p, m, n, |_, _| {
            let c: Vec<u64> = (0..=d).map(|_| rng.gen_range(0..p.value())).collect();
            Poly::from_u64s(p, &c)
        })
    }

    pub fn rows(&self) -> usize {
        self.m
    }

    pub fn cols(&self) -> usize {
        self.n
    }

    pub fn modulus(&self) -> Modulus {
        self.p
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Poly) {
        self.data[i * self.n + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Poly] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn row_vec(&self, i: usize) -> Vec<Poly> {
        self.row(i).to_vec()
    }

    pub fn to_rows(&self) -> Vec<Vec<Poly>> {
        (0..self.m).map(|i| self.row_vec(i)).collect()
    }

    pub fn entries(&self) -> &[Poly] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| e.is_zero())
    }

    /// Maximum entry degree, [`NEG_INF`] for the zero matrix.
    pub fn deg(&self) -> i64 {
        self.data.iter().map(|e| e.deg()).max().unwrap_or(NEG_INF)
    }

    /// `max(1, deg)`, the working degree used in every bound.
    pub fn working_degree(&self) -> u64 {
        self.deg().max(1) as u64
    }

    pub fn eval(&self, a: FieldElement) -> FieldMat {
        FieldMat::from_fn(self.p, self.m, self.n, |i, j| self.get(i, j).eval(a))
    }

    pub fn transpose(&self) -> PolyMat {
        PolyMat::from_fn(self.p, self.n, self.m, |i, j| self.get(j, i).clone())
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> PolyMat {
        PolyMat::from_fn(self.p, rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    pub fn select_rows(&self, rows: &[usize]) -> PolyMat {
        let cols: Vec<usize> = (0..self.n).collect();
        self.submatrix(rows, &cols)
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &PolyMat) -> Result<PolyMat, PolyMatError> {
        if self.n != other.n {
            return Err(PolyMatError::DimMismatch(format!("{} vs {} columns", self.n, other.n)));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(PolyMat { m: self.m + other.m, n: self.n, p: self.p, data })
    }

    pub fn mul(&self, b: &PolyMat) -> Result<PolyMat, PolyMatError> {
        if self.n != b.m {
            return Err(PolyMatError::DimMismatch(format!(
                "{}x{} times {}x{}",
                self.m, self.n, b.m, b.n
            )));
        }
        let mut c = PolyMat::zero(self.p, self.m, b.n);
        for i in 0..self.m {
            for k in 0..self.n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..b.n {
                    let bk = b.get(k, j);
                    if bk.is_zero() {
                        continue;
                    }
                    let v = c.get(i, j) + &(a * bk);
                    c.set(i, j, v);
                }
            }
        }
        Ok(c)
    }

    pub fn add(&self, b: &PolyMat) -> Result<PolyMat, PolyMatError> {
        if (self.m, self.n) != (b.m, b.n) {
            return Err(PolyMatError::DimMismatch("sum of unequal shapes".into()));
        }
        Ok(PolyMat::from_fn(self.p, self.m, self.n, |i, j| self.get(i, j) + b.get(i, j)))
    }

    pub fn sub(&self, b: &PolyMat) -> Result<PolyMat, PolyMatError> {
        if (self.m, self.n) != (b.m, b.n) {
            return Err(PolyMatError::DimMismatch("difference of unequal shapes".into()));
        }
        Ok(PolyMat::from_fn(self.p, self.m, self.n, |i, j| self.get(i, j) - b.get(i, j)))
    }

    pub fn scale(&self, f: &Poly) -> PolyMat {
        PolyMat::from_fn(self.p, self.m, self.n, |i, j| self.get(i, j) * f)
    }

    /// Row vector times matrix: `v A`.
    pub fn left_mul_vec(&self, v: &[Poly]) -> Result<Vec<Poly>, PolyMatError> {
        if v.len() != self.m {
            return Err(PolyMatError::DimMismatch(format!("vector of length {} vs {} rows", v.len(), self.m)));
        }
        let mut out = vec![Poly::zero(self.p); self.n];
        for (i, vi) in v.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            for (o, a) in out.iter_mut().zip(self.row(i)) {
                *o = &*o + &(vi * a);
            }
        }
        Ok(out)
    }
}

impl fmt::Debug for PolyMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "PolyMat {}x{} [", self.m, self.n)?;
        for i in 0..self.m {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        write!(f, "]")
    }
}

/// A random unimodular `m x m` matrix: a product of `ops` elementary row
/// operations (adding a multiple of degree at most `d` of one row to another,
/// swapping, scaling by a nonzero constant).
pub fn random_unimodular<R: Rng + ?Sized>(p: Modulus, m: usize, d: usize, ops: usize, rng: &mut R) -> PolyMat {
    let mut u = PolyMat::identity(p, m).to_rows();
    if m == 0 {
        return PolyMat::zero(p, 0, 0);
    }
    for _ in 0..ops {
        let i = rng.gen_range(0..m);
        let j = rng.gen_range(0..m);
        match rng.gen_range(0..6) {
            0 if i != j => u.swap(i, j),
            1 => {
                let c = Poly::constant(p.elem(rng.gen_range(1..p.value())));
                for e in u[i].iter_mut() {
                    *e = &*e * &c;
                }
            }
            _ if i != j => {
                let c: Vec<u64> = (0..=d).map(|_| rng.gen_range(0..p.value())).collect();
                let q = Poly::from_u64s(p, &c);
                let src = u[j].clone();
                for (e, s) in u[i].iter_mut().zip(&src) {
                    *e = &*e + &(&q * s);
                }
            }
            _ => {}
        }
    }
    PolyMat::from_rows(p, m, u).expect("square")
}

/// Evaluates a polynomial vector at `a`.
pub fn eval_vec(v: &[Poly], a: FieldElement) -> Vec<FieldElement> {
    v.iter().map(|e| e.eval(a)).collect()
}

/// Maximum degree over a polynomial vector.
pub fn vec_deg(v: &[Poly]) -> i64 {
    v.iter().map(|e| e.deg()).max().unwrap_or(NEG_INF)
}

#[cfg(test)]
mod tests;
