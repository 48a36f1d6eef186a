//! Toeplitz operators described by `rho + m - 1` scalars.

use crate::ff::{FieldElement, Modulus};
use crate::matfield::FieldMat;
use crate::upoly::Poly;

use super::{PolyMat, PolyMatError};

/// The `rho x m` matrix `C` with `C[i][j] = spec[i - j + m - 1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Toeplitz {
    rho: usize,
    m: usize,
    spec: Vec<FieldElement>,
}

impl Toeplitz {
    pub fn new(rho: usize, m: usize, spec: Vec<FieldElement>) -> Result<Toeplitz, PolyMatError> {
        let expected = (rho + m).saturating_sub(1);
        if spec.len() != expected {
            return Err(PolyMatError::LengthMismatch { got: spec.len(), expected });
        }
        Ok(Toeplitz { rho, m, spec })
    }

    pub fn rows(&self) -> usize {
        self.rho
    }

    pub fn cols(&self) -> usize {
        self.m
    }

    pub fn spec(&self) -> &[FieldElement] {
        &self.spec
    }

    pub fn entry(&self, i: usize, j: usize) -> FieldElement {
        self.spec[i + self.m - 1 - j]
    }

    pub fn materialize(&self, p: Modulus) -> FieldMat {
        FieldMat::from_fn(p, self.rho, self.m, |i, j| self.entry(i, j))
    }

    /// `C w` for a column vector of length `m`.
    pub fn apply_vec(&self, w: &[FieldElement], p: Modulus) -> Vec<FieldElement> {
        assert_eq!(w.len(), self.m, "vector length");
        (0..self.rho)
            .map(|i| (0..self.m).fold(p.zero(), |acc, j| acc + self.entry(i, j) * w[j]))
            .collect()
    }

    /// `C B` for an evaluated `m x n` matrix, without forming `C` as a matrix.
    pub fn apply_field(&self, b: &FieldMat) -> FieldMat {
        assert_eq!(b.rows(), self.m, "inner dimension");
        let p = b.modulus();
        let mut out = FieldMat::zero(p, self.rho, b.cols());
        for i in 0..self.rho {
            for j in 0..self.m {
                let c = self.entry(i, j);
                if c.is_zero() {
                    continue;
                }
                for k in 0..b.cols() {
                    let v = out.get(i, k) + c * b.get(j, k);
                    out.set(i, k, v);
                }
            }
        }
        out
    }

    /// `C A` over `F[x]`; used by the Prover only.
    pub fn apply_poly(&self, a: &PolyMat) -> PolyMat {
        assert_eq!(a.rows(), self.m, "inner dimension");
        let p = a.modulus();
        PolyMat::from_fn(p, self.rho, a.cols(), |i, k| {
            (0..self.m).fold(Poly::zero(p), |acc, j| &acc + &a.get(j, k).scale(self.entry(i, j)))
        })
    }
}
