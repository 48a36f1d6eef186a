//! Read access to public matrices and vectors.
//!
//! The Verifier sees an operand only through its dimensions, a degree bound
//! and evaluations, so composite operands such as `C A` for a Toeplitz `C` are
//! never expanded on its side. `to_polymat` / `to_polys` exist for Provers.

use crate::ff::{FieldElement, Modulus};
use crate::matfield::FieldMat;
use crate::polymat::{eval_vec, vec_deg, PolyMat, Toeplitz};
use crate::upoly::{Poly, NEG_INF};

pub trait MatrixOracle {
    fn rows(&self) -> usize;
    fn cols(&self) -> usize;
    fn modulus(&self) -> Modulus;
    /// Upper bound on every entry degree, [`NEG_INF`] for a zero matrix.
    fn degree(&self) -> i64;
    fn eval(&self, alpha: FieldElement) -> FieldMat;
    /// The explicit matrix. Prover side only.
    fn to_polymat(&self) -> PolyMat;
}

impl MatrixOracle for PolyMat {
    fn rows(&self) -> usize {
        PolyMat::rows(self)
    }

    fn cols(&self) -> usize {
        PolyMat::cols(self)
    }

    fn modulus(&self) -> Modulus {
        PolyMat::modulus(self)
    }

    fn degree(&self) -> i64 {
        self.deg()
    }

    fn eval(&self, alpha: FieldElement) -> FieldMat {
        PolyMat::eval(self, alpha)
    }

    fn to_polymat(&self) -> PolyMat {
        self.clone()
    }
}

/// The product `C A` of a constant Toeplitz matrix and an oracle.
pub struct ToeplitzTimes<'a> {
    pub c: &'a Toeplitz,
    pub a: &'a dyn MatrixOracle,
}

impl MatrixOracle for ToeplitzTimes<'_> {
    fn rows(&self) -> usize {
        self.c.rows()
    }

    fn cols(&self) -> usize {
        self.a.cols()
    }

    fn modulus(&self) -> Modulus {
        self.a.modulus()
    }

    fn degree(&self) -> i64 {
        self.a.degree()
    }

    fn eval(&self, alpha: FieldElement) -> FieldMat {
        self.c.apply_field(&self.a.eval(alpha))
    }

    fn to_polymat(&self) -> PolyMat {
        self.c.apply_poly(&self.a.to_polymat())
    }
}

/// The submatrix of `a` on the given rows and columns.
pub struct Submatrix<'a> {
    pub a: &'a dyn MatrixOracle,
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

impl MatrixOracle for Submatrix<'_> {
    fn rows(&self) -> usize {
        self.rows.len()
    }

    fn cols(&self) -> usize {
        self.cols.len()
    }

    fn modulus(&self) -> Modulus {
        self.a.modulus()
    }

    fn degree(&self) -> i64 {
        self.a.degree()
    }

    fn eval(&self, alpha: FieldElement) -> FieldMat {
        self.a.eval(alpha).submatrix(&self.rows, &self.cols)
    }

    fn to_polymat(&self) -> PolyMat {
        self.a.to_polymat().submatrix(&self.rows, &self.cols)
    }
}

pub trait VectorOracle {
    fn len(&self) -> usize;
    fn is_empty(&self) -> bool {
        self.len() == 0
    }
    fn modulus(&self) -> Modulus;
    fn degree(&self) -> i64;
    fn is_zero(&self) -> bool;
    fn eval(&self, alpha: FieldElement) -> Vec<FieldElement>;
    /// The explicit vector. Prover side only.
    fn to_polys(&self) -> Vec<Poly>;
}

/// A polynomial row vector together with its modulus (needed when empty).
pub struct PolyVec<'a> {
    pub p: Modulus,
    pub v: &'a [Poly],
}

impl VectorOracle for PolyVec<'_> {
    fn len(&self) -> usize {
        self.v.len()
    }

    fn modulus(&self) -> Modulus {
        self.p
    }

    fn degree(&self) -> i64 {
        vec_deg(self.v)
    }

    fn is_zero(&self) -> bool {
        self.v.iter().all(Poly::is_zero)
    }

    fn eval(&self, alpha: FieldElement) -> Vec<FieldElement> {
        eval_vec(self.v, alpha)
    }

    fn to_polys(&self) -> Vec<Poly> {
        self.v.to_vec()
    }
}

/// `f v` for a polynomial `f`.
pub struct ScaledVector<'a> {
    pub f: &'a Poly,
    pub v: &'a dyn VectorOracle,
}

impl VectorOracle for ScaledVector<'_> {
    fn len(&self) -> usize {
        self.v.len()
    }

    fn modulus(&self) -> Modulus {
        self.v.modulus()
    }

    fn degree(&self) -> i64 {
        let (a, b) = (self.f.deg(), self.v.degree());
        if a == NEG_INF || b == NEG_INF {
            NEG_INF
        } else {
            a + b
        }
    }

    fn is_zero(&self) -> bool {
        self.f.is_zero() || self.v.is_zero()
    }

    fn eval(&self, alpha: FieldElement) -> Vec<FieldElement> {
        let s = self.f.eval(alpha);
        self.v.eval(alpha).into_iter().map(|x| x * s).collect()
    }

    fn to_polys(&self) -> Vec<Poly> {
        self.v.to_polys().iter().map(|e| e * self.f).collect()
    }
}
