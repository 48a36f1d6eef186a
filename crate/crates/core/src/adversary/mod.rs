//! Cheating Provers for false statements and the soundness-experiment harness.
//!
//! [`Cheater`] answers like the honest Prover whenever that is possible and
//! otherwise falls back to a best-effort forgery. Its messages are always
//! well-formed, so every run ends in a Verifier decision.

mod experiment;
pub mod fixtures;
mod truth;

use thiserror::Error;

pub use experiment::{run_soundness_experiment, SoundnessReport};
pub use truth::{holds, is_saturated, row_space_contained, row_spaces_equal};

use crate::ff::{FieldElement, Modulus, SampleSet};
use crate::matfield::{nullvector_left, solve_right, sparse_representative, FieldMat};
use crate::polymat::{RatSolve, Toeplitz};
use crate::protocols::{Honest, MatrixOracle, ProtocolError, Prover, Request, Statement, VectorOracle};
use crate::transcript::Payload;
use crate::upoly::{Poly, RatFunc};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CheatError {
    #[error("the {0} instance is true; there is nothing to cheat on")]
    InstanceActuallyTrue(String),
    #[error(transparent)]
    Protocol(#[from] ProtocolError),
}

/// The tactic used against each protocol.
pub fn tactic(protocol_id: &str) -> &'static str {
    match protocol_id {
        "singularity" => "send a left null vector of A(alpha) when one exists, else a unit vector",
        "nonsingularity" => "commit the alpha of largest rank(A(alpha)), answer when b lies in the column space",
        "rank_lb" => "pivot sets of the best evaluation, then the nonsingularity tactic",
        "rank_ub" => "sparse solution when A(alpha) has small rank, else v truncated",
        "determinant" | "field_det" => "honest factors of A(alpha); wins iff delta(alpha) = det A(alpha)",
        "system_solve" | "matmul" | "inverse" => "no Prover moves; wins on an evaluation collision",
        "frrsm" => "g = polynomial part of u c and w = u(alpha) for the rational solution u",
        "coprime" => "interpolate s1, s2 so the Bezout identity holds on as many points of S as degrees allow",
        "rsm" => "honest compressions with the first denominator forged to 1",
        _ => "honest answers where possible, best-effort forgeries in sub-protocols",
    }
}

/// Best-effort cheating Prover.
pub struct Cheater {
    honest: Honest,
}

impl Cheater {
    pub fn new(p: Modulus, sample: SampleSet, seed: u64) -> Cheater {
        Cheater { honest: Honest::new(p, sample, seed) }
    }

    /// A cheater for `st`, refusing true statements.
    pub fn against(st: &Statement, p: Modulus, sample: SampleSet, seed: u64) -> Result<Cheater, CheatError> {
        if holds(st) {
            return Err(CheatError::InstanceActuallyTrue(st.id().into()));
        }
        Ok(Cheater::new(p, sample, seed))
    }

    fn p(&self) -> Modulus {
        self.honest.modulus()
    }

    fn best_point(&mut self, a: &dyn MatrixOracle) -> FieldElement {
        let p = self.p();
        let n = a.rows() as u64;
        let tries = self.honest.sample_set().sigma().min(n * a.degree().max(0) as u64 + 1).max(1);
        let mut best = (p.zero(), 0);
        for k in 0..tries {
            let x = p.elem(k);
            let r = a.eval(x).rank();
            if r > best.1 || k == 0 {
                best = (x, r);
            }
            if r == a.rows() {
                break;
            }
        }
        best.0
    }

    fn frrsm_commit(&mut self, a: &dyn MatrixOracle, v: &dyn VectorOracle, c: &[FieldElement]) -> Poly {
        let p = self.p();
        match self.honest.rational_solution(a, v) {
            RatSolve::Solution(u) => {
                let uc = u
                    .entries()
                    .iter()
                    .zip(c)
                    .fold(RatFunc::zero(p), |acc, (ui, ci)| acc.add(&ui.mul_poly(&Poly::constant(*ci))));
                uc.num().divrem(uc.den()).expect("nonzero denominator").0
            }
            _ => Poly::zero(p),
        }
    }

    fn frrsm_open(&mut self, a: &dyn MatrixOracle, v: &dyn VectorOracle, alpha: FieldElement) -> Vec<FieldElement> {
        let p = self.p();
        if let RatSolve::Solution(u) = self.honest.rational_solution(a, v) {
            if let Some(w) = u.eval(alpha) {
                return w;
            }
        }
        solve_right(&a.eval(alpha).transpose(), &v.eval(alpha)).unwrap_or_else(|| vec![p.zero(); a.rows()])
    }

    /// `s1, s2` of the allowed degrees making `f1 s1 + h s2 - 1` vanish on
    /// `deg s1 + deg s2 + 1` points of `S` that are not common roots.
    fn coprime_forgery(&mut self, fs: &[Poly]) -> (Poly, Poly, Vec<FieldElement>) {
        let p = self.p();
        let sample = self.honest.sample_set();
        let beta = sample.sample_vec(self.honest.rng(), p, fs.len().saturating_sub(2));
        let mut h = fs.get(1).cloned().unwrap_or_else(|| Poly::zero(p));
        for (b, f) in beta.iter().zip(fs.iter().skip(2)) {
            h = &h + &f.scale(*b);
        }
        let f1 = &fs[0];
        let k1 = fs.iter().skip(1).map(Poly::deg).max().unwrap_or(0).max(1) as usize;
        let k2 = f1.deg().max(1) as usize;
        let g = f1.gcd(&h);
        let points: Vec<FieldElement> = (0..sample.sigma())
            .map(|k| p.elem(k))
            .filter(|&a| g.is_zero() || !g.eval(a).is_zero())
            .take(k1 + k2 - 1)
            .collect();
        let rows: Vec<Vec<FieldElement>> = points
            .iter()
            .map(|&a| {
                let (fa, ha) = (f1.eval(a), h.eval(a));
                let mut row = Vec::with_capacity(k1 + k2);
                let mut pw = p.one();
                for _ in 0..k1 {
                    row.push(fa * pw);
                    pw *= a;
                }
                pw = p.one();
                for _ in 0..k2 {
                    row.push(ha * pw);
                    pw *= a;
                }
                row
            })
            .collect();
        let solved = FieldMat::from_rows(p, &rows)
            .ok()
            .filter(|m| m.rows() > 0)
            .and_then(|m| solve_right(&m, &vec![p.one(); points.len()]));
        match solved {
            Some(x) => (Poly::from_coeffs(p, &x[..k1]), Poly::from_coeffs(p, &x[k1..]), beta),
            None => (Poly::zero(p), Poly::zero(p), beta),
        }
    }

    fn rsm_forgery(
        &mut self,
        a: &dyn MatrixOracle,
        v: &dyn VectorOracle,
        rho: usize,
        t: usize,
    ) -> (Vec<Toeplitz>, Vec<Poly>) {
        let p = self.p();
        match self.honest.rsm_rounds(a, v, rho, t) {
            Ok((cs, mut ds, coprime)) => {
                if !coprime {
                    ds[0] = Poly::one(p);
                }
                (cs, ds)
            }
            Err(_) => {
                let sample = self.honest.sample_set();
                let cs = (0..t)
                    .map(|_| {
                        let spec = sample.sample_vec(self.honest.rng(), p, (rho + a.rows()).saturating_sub(1));
                        Toeplitz::new(rho, a.rows(), spec).expect("spec length")
                    })
                    .collect();
                (cs, vec![Poly::one(p); t])
            }
        }
    }
}

impl Prover for Cheater {
    fn respond(&mut self, req: Request<'_>) -> Result<Vec<Payload>, ProtocolError> {
        let p = self.p();
        Ok(match req {
            Request::Singularity { a, alpha } => {
                let n = a.rows();
                let v = nullvector_left(&a.eval(alpha)).unwrap_or_else(|| {
                    let mut e = vec![p.zero(); n];
                    if let Some(x) = e.first_mut() {
                        *x = p.one();
                    }
                    e
                });
                vec![Payload::FieldVector(v)]
            }
            Request::NonsingularityPoint { a } => vec![Payload::FieldScalar(self.best_point(a))],
            Request::NonsingularitySolve { a, alpha, b } => {
                let w = solve_right(&a.eval(alpha), b).unwrap_or_else(|| vec![p.zero(); a.cols()]);
                vec![Payload::FieldVector(w)]
            }
            Request::RankUbVector { a, rho, alpha, v } => {
                let g = sparse_representative(&a.eval(alpha), v, rho).unwrap_or_else(|| {
                    let mut g = v.to_vec();
                    for x in g.iter_mut().skip(rho) {
                        *x = p.zero();
                    }
                    g
                });
                vec![Payload::FieldVector(g)]
            }
            Request::FrrsmCommit { a, v, c } => match self.honest.respond(Request::FrrsmCommit { a, v, c }) {
                Ok(out) => out,
                Err(_) => vec![Payload::Poly(self.frrsm_commit(a, v, c))],
            },
            Request::FrrsmOpen { a, v, c, alpha } => match self.honest.respond(Request::FrrsmOpen { a, v, c, alpha }) {
                Ok(out) => out,
                Err(_) => vec![Payload::FieldVector(self.frrsm_open(a, v, alpha))],
            },
            Request::Coprime { fs } => match self.honest.respond(Request::Coprime { fs }) {
                Ok(out) => out,
                Err(_) => {
                    let (s1, s2, beta) = self.coprime_forgery(fs);
                    vec![Payload::Poly(s1), Payload::Poly(s2), Payload::FieldVector(beta)]
                }
            },
            Request::RsmCommit { a, v, rho, t } => {
                let (cs, ds) = self.rsm_forgery(a, v, rho, t);
                let mut out: Vec<Payload> = cs.into_iter().map(Payload::ToeplitzSpec).collect();
                out.push(Payload::PolyVector(ds));
                out
            }
            other => self.honest.respond(other)?,
        })
    }
}

#[cfg(test)]
mod tests;
