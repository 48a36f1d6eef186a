//! Normal forms, saturation and kernel bases.

use crate::polymat::{check_hermite_shape, check_popov_shape, PolyMat, Shift};
use crate::protocols::{ensure, Halt, Prover, Session};
use crate::transcript::Reason;

use super::{matmul, rank_lb, rs_equality, rs_subset};

/// `H` is the Hermite form of `A`.
pub fn hermite(s: &mut Session, pr: &mut dyn Prover, a: &PolyMat, h: &PolyMat) -> Result<(), Halt> {
    ensure(h.rows() <= a.rows(), Reason::ShapeCheckFailed)?;
    ensure(check_hermite_shape(h).0, Reason::ShapeCheckFailed)?;
    s.sub("rs_equality", |s| rs_equality(s, pr, a, h))
}

/// `P` is the `shift`-Popov form of `A`.
pub fn spopov(s: &mut Session, pr: &mut dyn Prover, a: &PolyMat, shift: &Shift, pm: &PolyMat) -> Result<(), Halt> {
    ensure(pm.rows() <= a.rows(), Reason::ShapeCheckFailed)?;
    ensure(check_popov_shape(pm, shift).0, Reason::ShapeCheckFailed)?;
    s.sub("rs_equality", |s| rs_equality(s, pr, a, pm))
}

/// `A`, assumed of full rank, is saturated.
pub fn saturated(s: &mut Session, pr: &mut dyn Prover, a: &PolyMat) -> Result<(), Halt> {
    let (m, n) = (a.rows(), a.cols());
    if m <= n {
        let id = PolyMat::identity(a.modulus(), m);
        let at = a.transpose();
        s.sub("rs_subset", |s| rs_subset(s, pr, &id, &at))
    } else {
        let id = PolyMat::identity(a.modulus(), n);
        s.sub("rs_subset", |s| rs_subset(s, pr, &id, a))
    }
}

/// `B` is a basis of the saturation of the row space of `A`.
pub fn sat_basis(s: &mut Session, pr: &mut dyn Prover, a: &PolyMat, b: &PolyMat) -> Result<(), Halt> {
    let l = b.rows();
    ensure(l <= a.rows().min(a.cols()), Reason::ShapeCheckFailed)?;
    s.sub("rank_lb", |s| rank_lb(s, pr, a, l))?;
    s.sub("rs_subset", |s| rs_subset(s, pr, a, b))?;
    s.sub("saturated", |s| saturated(s, pr, b))
}

/// `A` can be completed to a unimodular matrix.
pub fn unimod_completable(s: &mut Session, pr: &mut dyn Prover, a: &PolyMat) -> Result<(), Halt> {
    ensure(a.rows() < a.cols(), Reason::ShapeCheckFailed)?;
    s.sub("rank_lb", |s| rank_lb(s, pr, a, a.rows()))?;
    s.sub("saturated", |s| saturated(s, pr, a))
}

/// `B` is a basis of the left kernel of `A`.
pub fn kernel_basis(s: &mut Session, pr: &mut dyn Prover, a: &PolyMat, b: &PolyMat) -> Result<(), Halt> {
    let (m, l) = (a.rows(), b.rows());
    ensure(l <= m, Reason::ShapeCheckFailed)?;
    s.sub("rank_lb", |s| rank_lb(s, pr, b, l))?;
    s.sub("rank_lb", |s| rank_lb(s, pr, a, m - l))?;
    let zero = PolyMat::zero(a.modulus(), l, a.cols());
    s.sub("matmul", |s| matmul(s, b, a, &zero))?;
    s.sub("saturated", |s| saturated(s, pr, b))
}
