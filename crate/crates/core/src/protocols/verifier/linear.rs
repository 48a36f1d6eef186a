//! Singularity, rank, determinant and product certificates.

use crate::ff::FieldElement;
use crate::matfield::{is_permutation, perm_sign, FieldMat};
use crate::polymat::PolyMat;
use crate::protocols::{ensure, Halt, MatrixOracle, Prover, Request, Session, Submatrix};
use crate::transcript::Reason;
use crate::upoly::{Poly, NEG_INF};

use super::{clamp0, field_matrix, index_set, scalar, vector};

/// `A` (square) is singular.
pub fn singularity(s: &mut Session, pr: &mut dyn Prover, a: &dyn MatrixOracle) -> Result<(), Halt> {
    let alpha = s.challenge_scalar("alpha")?;
    let v = s.prover1("v", || pr.respond(Request::Singularity { a, alpha }))?;
    let v = vector(v, a.rows())?;
    ensure(v.iter().any(|x| !x.is_zero()), Reason::EvaluationCheckFailed)?;
    let va = a.eval(alpha).vec_mul(&v);
    ensure(va.iter().all(|x| x.is_zero()), Reason::EvaluationCheckFailed)
}

/// `A` (square) is nonsingular.
pub fn nonsingularity(s: &mut Session, pr: &mut dyn Prover, a: &dyn MatrixOracle) -> Result<(), Halt> {
    let alpha = s.prover1("alpha", || pr.respond(Request::NonsingularityPoint { a }))?;
    let alpha = scalar(alpha)?;
    ensure(s.sample_set().contains(alpha), Reason::MalformedMessage)?;
    let b = s.challenge_vector("b", a.rows())?;
    let w = s.prover1("w", || pr.respond(Request::NonsingularitySolve { a, alpha, b: &b }))?;
    let w = vector(w, a.cols())?;
    ensure(a.eval(alpha).mul_vec(&w) == b, Reason::EvaluationCheckFailed)
}

/// `rank A >= rho`.
pub fn rank_lb(s: &mut Session, pr: &mut dyn Prover, a: &dyn MatrixOracle, rho: usize) -> Result<(), Halt> {
    if rho == 0 {
        return Ok(());
    }
    let sets = s.prover(&["rows", "cols"], || pr.respond(Request::RankLbSets { a, rho }))?;
    let mut it = sets.into_iter();
    let rows = index_set(it.next().expect("two messages"))?;
    let cols = index_set(it.next().expect("two messages"))?;
    ensure(distinct_in_range(&rows, rho, a.rows()), Reason::ShapeCheckFailed)?;
    ensure(distinct_in_range(&cols, rho, a.cols()), Reason::ShapeCheckFailed)?;
    let sub = Submatrix { a, rows, cols };
    s.sub("nonsingularity", |s| nonsingularity(s, pr, &sub))
}

fn distinct_in_range(v: &[usize], len: usize, bound: usize) -> bool {
    let mut seen = vec![false; bound];
    v.len() == len
        && v.iter().all(|&k| {
            let fresh = k < bound && !seen[k];
            if fresh {
                seen[k] = true;
            }
            fresh
        })
}

/// `rank A <= rho`.
pub fn rank_ub(s: &mut Session, pr: &mut dyn Prover, a: &dyn MatrixOracle, rho: usize) -> Result<(), Halt> {
    let alpha = s.challenge_scalar("alpha")?;
    let v = s.challenge_vector("v", a.cols())?;
    let gamma = s.prover1("gamma", || pr.respond(Request::RankUbVector { a, rho, alpha, v: &v }))?;
    let gamma = vector(gamma, a.cols())?;
    let weight = gamma.iter().filter(|x| !x.is_zero()).count();
    ensure(weight <= rho, Reason::RankCheckFailed)?;
    let ev = a.eval(alpha);
    ensure(ev.mul_vec(&gamma) == ev.mul_vec(&v), Reason::EvaluationCheckFailed)
}

/// `rank A = rho`.
pub fn rank(s: &mut Session, pr: &mut dyn Prover, a: &dyn MatrixOracle, rho: usize) -> Result<(), Halt> {
    s.sub("rank_lb", |s| rank_lb(s, pr, a, rho))?;
    s.sub("rank_ub", |s| rank_ub(s, pr, a, rho))
}

/// `det A = delta`.
pub fn determinant(s: &mut Session, pr: &mut dyn Prover, a: &dyn MatrixOracle, delta: &Poly) -> Result<(), Halt> {
    let n = a.rows() as i64;
    let bound = n.saturating_mul(clamp0(a.degree()));
    ensure(delta.deg() <= bound, Reason::DegreeCheckFailed)?;
    let alpha = s.challenge_scalar("alpha")?;
    let beta = delta.eval(alpha);
    let b = a.eval(alpha);
    s.sub("field_det", |s| field_det(s, pr, &b, beta))
}

/// `det B = beta` for a square field matrix, from a PLUQ factorization
/// checked by one random product.
pub fn field_det(s: &mut Session, pr: &mut dyn Prover, b: &FieldMat, beta: FieldElement) -> Result<(), Halt> {
    let n = b.rows();
    let p = s.modulus();
    let msgs = s.prover(&["rows", "cols", "l", "u"], || pr.respond(Request::FieldDet { b }))?;
    let mut it = msgs.into_iter();
    let rows = index_set(it.next().expect("four messages"))?;
    let cols = index_set(it.next().expect("four messages"))?;
    let l = field_matrix(it.next().expect("four messages"))?;
    let u = field_matrix(it.next().expect("four messages"))?;
    let r = u.rows();
    let shape_ok = rows.len() == n
        && cols.len() == n
        && is_permutation(&rows)
        && is_permutation(&cols)
        && l.rows() == n
        && l.cols() == r
        && u.cols() == n
        && r <= n
        && unit_lower(&l)
        && upper_nonsingular(&u);
    ensure(shape_ok, Reason::MalformedMessage)?;
    let v = s.challenge_vector("v", n)?;
    let y: Vec<FieldElement> = cols.iter().map(|&c| v[c]).collect();
    let z = l.mul_vec(&u.mul_vec(&y));
    let bv = b.mul_vec(&v);
    ensure(rows.iter().zip(&z).all(|(&i, zi)| bv[i] == *zi), Reason::EvaluationCheckFailed)?;
    let expected = if r == n {
        let d = (0..n).fold(p.one(), |acc, i| acc * u.get(i, i));
        if perm_sign(&rows) * perm_sign(&cols) < 0 {
            -d
        } else {
            d
        }
    } else {
        p.zero()
    };
    ensure(expected == beta, Reason::EvaluationCheckFailed)
}

fn unit_lower(l: &FieldMat) -> bool {
    (0..l.rows()).all(|i| {
        (0..l.cols()).all(|j| match i.cmp(&j) {
            std::cmp::Ordering::Less => l.get(i, j).is_zero(),
            std::cmp::Ordering::Equal => l.get(i, j).is_one(),
            std::cmp::Ordering::Greater => true,
        })
    })
}

fn upper_nonsingular(u: &FieldMat) -> bool {
    (0..u.rows()).all(|i| (0..u.cols().min(i + 1)).all(|j| if j == i { !u.get(i, j).is_zero() } else { u.get(i, j).is_zero() }))
        && u.rows() <= u.cols()
}

/// `A v = delta b`, checked at one point. No Prover messages.
pub fn system_solve(
    s: &mut Session,
    a: &dyn MatrixOracle,
    b: &[Poly],
    v: &[Poly],
    delta: &Poly,
) -> Result<(), Halt> {
    let alpha = s.challenge_scalar("alpha")?;
    let av = a.eval(alpha).mul_vec(&v.iter().map(|f| f.eval(alpha)).collect::<Vec<_>>());
    let d = delta.eval(alpha);
    let ok = av.iter().zip(b).all(|(x, bi)| *x == d * bi.eval(alpha));
    ensure(ok, Reason::EvaluationCheckFailed)
}

/// `A B = C`.
pub fn matmul(
    s: &mut Session,
    a: &dyn MatrixOracle,
    b: &dyn MatrixOracle,
    c: &dyn MatrixOracle,
) -> Result<(), Halt> {
    let (da, db, dc) = (a.degree(), b.degree(), c.degree());
    let deg_ok = dc == NEG_INF || (da != NEG_INF && db != NEG_INF && dc <= da + db);
    ensure(deg_ok, Reason::DegreeCheckFailed)?;
    let alpha = s.challenge_scalar("alpha")?;
    let v = s.challenge_vector("v", c.cols())?;
    let abv = a.eval(alpha).mul_vec(&b.eval(alpha).mul_vec(&v));
    ensure(abv == c.eval(alpha).mul_vec(&v), Reason::EvaluationCheckFailed)
}

/// `A B = I`.
pub fn inverse(s: &mut Session, a: &dyn MatrixOracle, b: &dyn MatrixOracle) -> Result<(), Halt> {
    let id = PolyMat::identity(a.modulus(), a.rows());
    matmul(s, a, b, &id)
}

