//! Ground truth for every statement, from the Prover-side algorithms.

use crate::matfield::det_field;
use crate::polymat::{
    bareiss, check_hermite_shape, check_popov_shape, det_bareiss, rational_solve_left, row_membership_oracle,
    saturation_basis, PolyMat, RatSolve,
};
use crate::protocols::Statement;
use crate::upoly::Poly;

fn rank(a: &PolyMat) -> usize {
    bareiss(a).rank
}

fn column(v: &[Poly], p: crate::ff::Modulus) -> PolyMat {
    PolyMat::from_rows(p, 1, v.iter().map(|e| vec![e.clone()]).collect()).expect("one column")
}

/// Every row of `a` lies in the row space of `b`.
pub fn row_space_contained(a: &PolyMat, b: &PolyMat) -> bool {
    (0..a.rows()).all(|i| row_membership_oracle(b, a.row(i)))
}

pub fn row_spaces_equal(a: &PolyMat, b: &PolyMat) -> bool {
    row_space_contained(a, b) && row_space_contained(b, a)
}

/// The row space of `a` is its own saturation.
pub fn is_saturated(a: &PolyMat) -> bool {
    row_space_contained(&saturation_basis(a), a)
}

/// True when the claim of `st` holds.
pub fn holds(st: &Statement) -> bool {
    match st {
        Statement::Singularity { a } => det_bareiss(a).is_zero(),
        Statement::Nonsingularity { a } => !det_bareiss(a).is_zero(),
        Statement::RankLb { a, rho } => rank(a) >= *rho,
        Statement::RankUb { a, rho } => rank(a) <= *rho,
        Statement::Rank { a, rho } => rank(a) == *rho,
        Statement::Determinant { a, delta } => det_bareiss(a) == *delta,
        Statement::FieldDet { b, beta } => det_field(b) == Ok(*beta),
        Statement::SystemSolve { a, b, v, delta } => {
            let p = a.modulus();
            let av = a.mul(&column(v, p)).expect("dims checked");
            av == column(b, p).scale(delta)
        }
        Statement::MatMul { a, b, c } => a.mul(b).is_ok_and(|ab| ab == *c),
        Statement::Inverse { a, b } => a.mul(b).is_ok_and(|ab| ab == PolyMat::identity(a.modulus(), a.rows())),
        Statement::Frrsm { a, v } => {
            v.iter().all(Poly::is_zero)
                || matches!(rational_solve_left(a, v), Ok(RatSolve::Solution(u)) if u.is_poly())
        }
        Statement::Coprime { fs } => fs.iter().fold(Poly::zero(fs[0].modulus()), |g, f| g.gcd(f)).is_one(),
        Statement::Rsm { a, v } => row_membership_oracle(a, v),
        Statement::RsSubset { a, b } => row_space_contained(a, b),
        Statement::RsEquality { a, b } => row_spaces_equal(a, b),
        Statement::RowBasis { a, b } => rank(b) == b.rows() && row_spaces_equal(a, b),
        Statement::Hermite { a, h } => h.rows() <= a.rows() && check_hermite_shape(h).0 && row_spaces_equal(a, h),
        Statement::Spopov { a, shift, p } => {
            p.rows() <= a.rows() && check_popov_shape(p, shift).0 && row_spaces_equal(a, p)
        }
        Statement::Saturated { a } => is_saturated(a),
        Statement::SatBasis { a, b } => {
            b.rows() <= a.rows().min(a.cols())
                && rank(a) >= b.rows()
                && row_space_contained(a, b)
                && is_saturated(b)
        }
        Statement::UnimodCompletable { a } => a.rows() < a.cols() && rank(a) == a.rows() && is_saturated(a),
        Statement::KernelBasis { a, b } => {
            let (m, l) = (a.rows(), b.rows());
            l <= m
                && rank(b) == l
                && rank(a) + l >= m
                && b.mul(a).is_ok_and(|ba| ba.is_zero())
                && is_saturated(b)
        }
    }
}
