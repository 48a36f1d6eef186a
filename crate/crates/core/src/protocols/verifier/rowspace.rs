//! Row-space membership and the certificates built on it.

use crate::polymat::{PolyMat, Toeplitz};
use crate::protocols::{
    ensure, reject, rsm_repetitions, Halt, MatrixOracle, Prover, ProtocolError, Request, ScaledVector, Session,
    ToeplitzTimes, VectorOracle,
};
use crate::protocols::oracle::PolyVec;
use crate::transcript::Reason;
use crate::upoly::{Poly, NEG_INF};

use super::{clamp0, poly, poly_vector, rank_claim, toeplitz, vector};
use super::{rank_lb, rank_ub};
use crate::matfield::dot;

/// `v` lies in the row space of `A`, where `A` has full row rank.
pub fn frrsm(s: &mut Session, pr: &mut dyn Prover, a: &dyn MatrixOracle, v: &dyn VectorOracle) -> Result<(), Halt> {
    let m = a.rows();
    let c = s.challenge_vector("c", m)?;
    let g = s.prover1("g", || pr.respond(Request::FrrsmCommit { a, v, c: &c }))?;
    let g = poly(g)?;
    let bound = (m as i64).saturating_mul(clamp0(a.degree())).saturating_add(clamp0(v.degree()));
    ensure(g.deg() <= bound, Reason::DegreeCheckFailed)?;
    let alpha = s.challenge_scalar("alpha")?;
    let w = s.prover1("w", || pr.respond(Request::FrrsmOpen { a, v, c: &c, alpha }))?;
    let w = vector(w, m)?;
    ensure(a.eval(alpha).vec_mul(&w) == v.eval(alpha), Reason::EvaluationCheckFailed)?;
    ensure(dot(&w, &c, s.modulus()) == g.eval(alpha), Reason::EvaluationCheckFailed)
}

/// `gcd(f_1, ..., f_t) = 1`.
pub fn coprime(s: &mut Session, pr: &mut dyn Prover, fs: &[Poly]) -> Result<(), Halt> {
    let t = fs.len();
    let msgs = s.prover(&["s1", "s2", "beta"], || pr.respond(Request::Coprime { fs }))?;
    let mut it = msgs.into_iter();
    let s1 = poly(it.next().expect("three messages"))?;
    let s2 = poly(it.next().expect("three messages"))?;
    let beta = vector(it.next().expect("three messages"), t.saturating_sub(2))?;
    let d1 = fs.first().map_or(NEG_INF, Poly::deg);
    let dh = fs.iter().skip(1).map(Poly::deg).max().unwrap_or(NEG_INF);
    ensure(s1.deg() < dh.max(1) && s2.deg() < d1.max(1), Reason::DegreeCheckFailed)?;
    let alpha = s.challenge_scalar("alpha")?;
    let p = s.modulus();
    let f1 = fs.first().map_or(p.zero(), |f| f.eval(alpha));
    let mut h = fs.get(1).map_or(p.zero(), |f| f.eval(alpha));
    for (b, f) in beta.iter().zip(fs.iter().skip(2)) {
        h += *b * f.eval(alpha);
    }
    ensure((f1 * s1.eval(alpha) + h * s2.eval(alpha)).is_one(), Reason::EvaluationCheckFailed)
}

/// `v` lies in the row space of `A`.
pub fn rsm(s: &mut Session, pr: &mut dyn Prover, a: &dyn MatrixOracle, v: &dyn VectorOracle) -> Result<(), Halt> {
    let (m, n) = (a.rows(), a.cols());
    let rho = rank_claim(s.prover1("rho", || pr.respond(Request::RsmRank { a, v }))?)?;
    if rho == 0 {
        return ensure(v.is_zero(), Reason::EvaluationCheckFailed);
    }
    ensure(rho <= m.min(n) as u64, Reason::RankCheckFailed)?;
    let rho = rho as usize;
    let Some(t) = rsm_repetitions(s.sigma(), rho as u64, a.degree().max(1) as u64) else {
        return reject(Reason::ParamsInvalid);
    };
    let mut labels: Vec<String> = (1..=t).map(|i| format!("c{i}")).collect();
    labels.push("d".into());
    let label_refs: Vec<&str> = labels.iter().map(String::as_str).collect();
    let mut msgs = s.prover(&label_refs, || pr.respond(Request::RsmCommit { a, v, rho, t }))?;
    let ds = poly_vector(msgs.pop().expect("t + 1 messages"), t)?;
    let cs = msgs.into_iter().map(toeplitz).collect::<Result<Vec<Toeplitz>, Halt>>()?;
    ensure(cs.iter().all(|c| c.rows() == rho && c.cols() == m), Reason::ShapeCheckFailed)?;
    let bound = (rho as i64).saturating_mul(clamp0(a.degree()));
    ensure(ds.iter().all(|d| d.deg() <= bound), Reason::DegreeCheckFailed)?;

    s.sub("rank_ub", |s| rank_ub(s, pr, a, rho))?;
    for c in &cs {
        let ca = ToeplitzTimes { c, a };
        s.sub("rank_lb", |s| rank_lb(s, pr, &ca, rho))?;
    }
    s.sub("coprime", |s| coprime(s, pr, &ds))?;
    for (c, d) in cs.iter().zip(&ds) {
        let ca = ToeplitzTimes { c, a };
        let dv = ScaledVector { f: d, v };
        s.sub("frrsm", |s| frrsm(s, pr, &ca, &dv))?;
    }
    Ok(())
}

/// The row space of `A` is contained in that of `B`.
pub fn rs_subset(s: &mut Session, pr: &mut dyn Prover, a: &PolyMat, b: &dyn MatrixOracle) -> Result<(), Halt> {
    let lambda = s.challenge_vector("lambda", a.rows())?;
    let lambda: Vec<Poly> = lambda.into_iter().map(Poly::constant).collect();
    let v = a
        .left_mul_vec(&lambda)
        .map_err(|e| Halt::Abort(ProtocolError::Internal(e.to_string())))?;
    let v = PolyVec { p: s.modulus(), v: &v };
    s.sub("rsm", |s| rsm(s, pr, b, &v))
}

/// `A` and `B` have the same row space.
pub fn rs_equality(s: &mut Session, pr: &mut dyn Prover, a: &PolyMat, b: &PolyMat) -> Result<(), Halt> {
    s.sub("rs_subset", |s| rs_subset(s, pr, a, b))?;
    s.sub("rs_subset", |s| rs_subset(s, pr, b, a))
}

/// `B` is a basis of the row space of `A`.
pub fn row_basis(s: &mut Session, pr: &mut dyn Prover, a: &PolyMat, b: &PolyMat) -> Result<(), Halt> {
    s.sub("rank_lb", |s| rank_lb(s, pr, b, b.rows()))?;
    s.sub("rs_equality", |s| rs_equality(s, pr, a, b))
}
