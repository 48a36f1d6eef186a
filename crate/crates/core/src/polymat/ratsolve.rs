//! Rational solving `u A = v` for matrices of full row rank.

use crate::upoly::{Poly, RatFunc, RatVec};

use super::{bareiss::rank_and_profile, PolyMat, PolyMatError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RatSolve {
    /// The unique `u` in `F(x)^{1 x m}` with `u A = v`.
    Solution(RatVec),
    LowRank,
    NoSolution,
}

/// Solves `u A = v` when `A` has full row rank. The system is first solved on
/// the columns of the rank profile (a nonsingular `m x m` block), and the
/// candidate is then checked against every column.
pub fn rational_solve_left(a: &PolyMat, v: &[Poly]) -> Result<RatSolve, PolyMatError> {
    let (m, n, p) = (a.rows(), a.cols(), a.modulus());
    if v.len() != n {
        return Err(PolyMatError::DimMismatch(format!("vector of length {} vs {n} columns", v.len())));
    }
    let (r, prof) = rank_and_profile(a);
    if r < m {
        return Ok(RatSolve::LowRank);
    }
    // u B = v_J  <=>  B^T u^T = v_J^T; eliminate on the augmented system
    // [B^T | v_J^T] over F(x).
    let mut w: Vec<Vec<RatFunc>> = prof
        .iter()
        .map(|&c| {
            let mut row: Vec<RatFunc> = (0..m).map(|i| RatFunc::from_poly(a.get(i, c).clone())).collect();
            row.push(RatFunc::from_poly(v[c].clone()));
            row
        })
        .collect();
    for col in 0..m {
        let pi = (col..m)
            .find(|&i| !w[i][col].is_zero())
            .expect("block on the rank profile is nonsingular");
        w.swap(col, pi);
        let inv = w[col][col].inv().expect("nonzero pivot");
        for x in &mut w[col][col..=m] {
            *x = x.mul(&inv);
        }
        let prow = w[col].clone();
        for (i, row) in w.iter_mut().enumerate() {
            if i == col || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for k in col..=m {
                if !prow[k].is_zero() {
                    row[k] = row[k].sub(&f.mul(&prow[k]));
                }
            }
        }
    }
    let u = RatVec::from_entries(p, w.into_iter().map(|row| row[m].clone()).collect());
    // Check u A = v on all columns via the common denominator.
    let g = u.common_den().clone();
    let lhs = a.left_mul_vec(&u.numerators())?;
    if lhs.iter().zip(v).all(|(l, vi)| *l == vi * &g) {
        Ok(RatSolve::Solution(u))
    } else {
        Ok(RatSolve::NoSolution)
    }
}
