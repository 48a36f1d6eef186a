//! The Prover interface and the honest strategy.
//!
//! A Prover answers typed [`Request`]s, one per Prover turn, with the list of
//! messages it sends. Requests carry the public operands and every challenge
//! seen so far, so strategies can be stateless.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

use crate::ff::{FieldElement, Modulus, SampleSet};
use crate::matfield::{nullvector_left, pluq, solve_right, sparse_representative, FieldMat};
use crate::polymat::{bareiss, rational_solve_left, PolyMat, RatSolve, Toeplitz};
use crate::transcript::Payload;
use crate::upoly::{Poly, RatFunc, RatVec};

use super::{MatrixOracle, ProtocolError, VectorOracle};

/// One Prover turn, with the inputs it may depend on.
pub enum Request<'a> {
    /// Left null vector `v` of `A(alpha)`.
    Singularity { a: &'a dyn MatrixOracle, alpha: FieldElement },
    /// Commitment to a point `alpha` with `A(alpha)` nonsingular.
    NonsingularityPoint { a: &'a dyn MatrixOracle },
    /// `w` with `A(alpha) w = b`.
    NonsingularitySolve { a: &'a dyn MatrixOracle, alpha: FieldElement, b: &'a [FieldElement] },
    /// Row and column index sets of a nonsingular `rho x rho` submatrix.
    RankLbSets { a: &'a dyn MatrixOracle, rho: usize },
    /// `gamma` of weight at most `rho` with `A(alpha) gamma = A(alpha) v`.
    RankUbVector { a: &'a dyn MatrixOracle, rho: usize, alpha: FieldElement, v: &'a [FieldElement] },
    /// Factors `P, Q, L, U` of a field matrix.
    FieldDet { b: &'a FieldMat },
    /// `g = u c` where `u A = v`.
    FrrsmCommit { a: &'a dyn MatrixOracle, v: &'a dyn VectorOracle, c: &'a [FieldElement] },
    /// `w = u(alpha)`.
    FrrsmOpen { a: &'a dyn MatrixOracle, v: &'a dyn VectorOracle, c: &'a [FieldElement], alpha: FieldElement },
    /// Bezout data `s1, s2, beta` for `f_1, ..., f_t`.
    Coprime { fs: &'a [Poly] },
    /// The rank claim `rho`.
    RsmRank { a: &'a dyn MatrixOracle, v: &'a dyn VectorOracle },
    /// `t` Toeplitz matrices followed by the denominators `d_1, ..., d_t`.
    RsmCommit { a: &'a dyn MatrixOracle, v: &'a dyn VectorOracle, rho: usize, t: usize },
}

pub trait Prover {
    fn respond(&mut self, req: Request<'_>) -> Result<Vec<Payload>, ProtocolError>;
}

/// Stands in for the Prover when a stored transcript is re-verified.
pub struct NoProver;

impl Prover for NoProver {
    fn respond(&mut self, _: Request<'_>) -> Result<Vec<Payload>, ProtocolError> {
        Err(ProtocolError::Internal("no prover is attached to a replay".into()))
    }
}

/// Iteration caps of the membership Prover: `20 t` Toeplitz draws per round
/// and 20 rounds.
const RSM_DRAWS_PER_T: usize = 20;
const RSM_ROUNDS: usize = 20;
const COPRIME_TRIES: usize = 100;

/// The honest Prover. Randomness is its own seeded generator; rational
/// solutions are cached so each is computed once per run.
pub struct Honest {
    p: Modulus,
    sample: SampleSet,
    rng: ChaCha20Rng,
    solves: HashMap<(PolyMat, Vec<Poly>), RatSolve>,
}

impl Honest {
    pub fn new(p: Modulus, sample: SampleSet, seed: u64) -> Honest {
        Honest { p, sample, rng: ChaCha20Rng::seed_from_u64(seed), solves: HashMap::new() }
    }

    pub fn modulus(&self) -> Modulus {
        self.p
    }

    pub fn sample_set(&self) -> SampleSet {
        self.sample
    }

    pub fn rng(&mut self) -> &mut ChaCha20Rng {
        &mut self.rng
    }

    fn solve(&mut self, a: &PolyMat, v: &[Poly]) -> RatSolve {
        let key = (a.clone(), v.to_vec());
        if let Some(s) = self.solves.get(&key) {
            return s.clone();
        }
        let s = rational_solve_left(a, v).expect("dimensions checked by the verifier");
        self.solves.insert(key, s.clone());
        s
    }

    /// Polynomial solution of `u A = v`, if there is one.
    fn poly_solution(&mut self, a: &dyn MatrixOracle, v: &dyn VectorOracle) -> Result<Vec<Poly>, ProtocolError> {
        if v.is_zero() {
            return Ok(vec![Poly::zero(self.p); a.rows()]);
        }
        let (am, vv) = (a.to_polymat(), v.to_polys());
        match self.solve(&am, &vv) {
            RatSolve::Solution(u) if u.is_poly() => Ok(u.numerators()),
            RatSolve::Solution(_) => Err(ProtocolError::ProverGaveUp("the solution is not polynomial".into())),
            RatSolve::LowRank => Err(ProtocolError::ProverGaveUp("matrix is not of full row rank".into())),
            RatSolve::NoSolution => Err(ProtocolError::ProverGaveUp("no rational solution".into())),
        }
    }

    pub fn nonsingular_point(&mut self, a: &dyn MatrixOracle) -> FieldElement {
        let n = a.rows() as u64;
        let d = a.degree().max(0) as u64;
        let tries = self.sample.sigma().min(n * d + 1);
        (0..tries)
            .map(|k| self.p.elem(k))
            .find(|&x| {
                let e = a.eval(x);
                e.rows() == e.cols() && e.rank() == e.rows()
            })
            .unwrap_or(self.p.zero())
    }

    pub fn rank_lb_sets(&mut self, a: &dyn MatrixOracle, rho: usize) -> (Vec<usize>, Vec<usize>) {
        for _ in 0..4 {
            let x = self.p.elem(self.rng.gen_range(0..self.p.value()));
            let f = pluq(&a.eval(x));
            if f.rank >= rho {
                return (f.rows[..rho].to_vec(), f.cols[..rho].to_vec());
            }
        }
        let b = bareiss(&a.to_polymat());
        if b.rank >= rho {
            return (b.rows[..rho].to_vec(), b.cols[..rho].to_vec());
        }
        ((0..rho).collect(), (0..rho).collect())
    }

    /// Bezout data for `f_1` and `h = f_2 + sum beta_i f_i` with random `beta`.
    pub fn coprime_certificate(&mut self, fs: &[Poly]) -> Result<(Poly, Poly, Vec<FieldElement>), ProtocolError> {
        let p = self.p;
        let Some(f1) = fs.first() else {
            return Err(ProtocolError::ProverGaveUp("no polynomials".into()));
        };
        for _ in 0..COPRIME_TRIES {
            let beta = self.sample.sample_vec(&mut self.rng, p, fs.len().saturating_sub(2));
            let mut h = fs.get(1).cloned().unwrap_or_else(|| Poly::zero(p));
            for (b, f) in beta.iter().zip(&fs[2.min(fs.len())..]) {
                h = &h + &f.scale(*b);
            }
            if let Ok((g, s1, s2)) = f1.xgcd(&h) {
                if g.is_one() {
                    return Ok((s1, s2, beta));
                }
            }
            if fs.len() <= 2 {
                break;
            }
        }
        Err(ProtocolError::ProverGaveUp("the polynomials share a factor".into()))
    }

    /// Random Toeplitz compressions until `t` of them keep rank `rho`, repeated
    /// until the denominators of the rational solutions are coprime. Returns
    /// the last round and whether its denominators are coprime.
    pub fn rsm_rounds(
        &mut self,
        a: &dyn MatrixOracle,
        v: &dyn VectorOracle,
        rho: usize,
        t: usize,
    ) -> Result<(Vec<Toeplitz>, Vec<Poly>, bool), ProtocolError> {
        let (p, m) = (self.p, a.rows());
        let am = a.to_polymat();
        let vv = v.to_polys();
        let mut last = (Vec::new(), Vec::new());
        for _ in 0..RSM_ROUNDS {
            let mut cs = Vec::with_capacity(t);
            let mut ds: Vec<Poly> = Vec::with_capacity(t);
            let mut draws = 0;
            while cs.len() < t {
                draws += 1;
                if draws > RSM_DRAWS_PER_T * t {
                    return Err(ProtocolError::ProverGaveUp("no rank-preserving compression found".into()));
                }
                let spec = self.sample.sample_vec(&mut self.rng, p, (rho + m).saturating_sub(1));
                let c = Toeplitz::new(rho, m, spec).expect("spec length");
                let ca = c.apply_poly(&am);
                match self.solve(&ca, &vv) {
                    RatSolve::LowRank => continue,
                    RatSolve::NoSolution => {
                        return Err(ProtocolError::ProverGaveUp("v is not in the rational row space".into()))
                    }
                    RatSolve::Solution(w) => {
                        let d = w.common_den().clone();
                        // The later full-rank membership run on (C A, d v)
                        // reuses this solution.
                        let dv: Vec<Poly> = vv.iter().map(|e| e * &d).collect();
                        let dw = RatVec::from_entries(p, w.numerators().into_iter().map(RatFunc::from_poly).collect());
                        self.solves.insert((ca, dv), RatSolve::Solution(dw));
                        cs.push(c);
                        ds.push(d);
                    }
                }
            }
            let g = ds.iter().fold(Poly::zero(p), |g, d| g.gcd(d));
            if g.is_one() {
                return Ok((cs, ds, true));
            }
            last = (cs, ds);
        }
        Ok((last.0, last.1, false))
    }

    /// The rational solution of `u A = v`, cached.
    pub fn rational_solution(&mut self, a: &dyn MatrixOracle, v: &dyn VectorOracle) -> RatSolve {
        self.solve(&a.to_polymat(), &v.to_polys())
    }
}

impl Prover for Honest {
    fn respond(&mut self, req: Request<'_>) -> Result<Vec<Payload>, ProtocolError> {
        let p = self.p;
        Ok(match req {
            Request::Singularity { a, alpha } => {
                let v = nullvector_left(&a.eval(alpha)).unwrap_or_else(|| vec![p.zero(); a.rows()]);
                vec![Payload::FieldVector(v)]
            }
            Request::NonsingularityPoint { a } => vec![Payload::FieldScalar(self.nonsingular_point(a))],
            Request::NonsingularitySolve { a, alpha, b } => {
                let w = solve_right(&a.eval(alpha), b).unwrap_or_else(|| vec![p.zero(); a.cols()]);
                vec![Payload::FieldVector(w)]
            }
            Request::RankLbSets { a, rho } => {
                let (i, j) = self.rank_lb_sets(a, rho);
                let idx = |v: Vec<usize>| Payload::IndexSet(v.into_iter().map(|k| k as u64).collect());
                vec![idx(i), idx(j)]
            }
            Request::RankUbVector { a, rho, alpha, v } => {
                let g = sparse_representative(&a.eval(alpha), v, rho).unwrap_or_else(|| v.to_vec());
                vec![Payload::FieldVector(g)]
            }
            Request::FieldDet { b } => {
                let f = pluq(b);
                let idx = |v: &[usize]| Payload::IndexSet(v.iter().map(|&k| k as u64).collect());
                vec![idx(&f.rows), idx(&f.cols), Payload::FieldMatrix(f.l), Payload::FieldMatrix(f.u)]
            }
            Request::FrrsmCommit { a, v, c } => {
                let u = self.poly_solution(a, v)?;
                let g = u.iter().zip(c).fold(Poly::zero(p), |g, (ui, ci)| &g + &ui.scale(*ci));
                vec![Payload::Poly(g)]
            }
            Request::FrrsmOpen { a, v, alpha, .. } => {
                let u = self.poly_solution(a, v)?;
                vec![Payload::FieldVector(u.iter().map(|e| e.eval(alpha)).collect())]
            }
            Request::Coprime { fs } => {
                let (s1, s2, beta) = self.coprime_certificate(fs)?;
                vec![Payload::Poly(s1), Payload::Poly(s2), Payload::FieldVector(beta)]
            }
            Request::RsmRank { a, .. } => vec![Payload::RankClaim(bareiss(&a.to_polymat()).rank as u64)],
            Request::RsmCommit { a, v, rho, t } => {
                let (cs, ds, coprime) = self.rsm_rounds(a, v, rho, t)?;
                if !coprime {
                    return Err(ProtocolError::ProverGaveUp("denominators kept a common factor".into()));
                }
                let mut out: Vec<Payload> = cs.into_iter().map(Payload::ToeplitzSpec).collect();
                out.push(Payload::PolyVector(ds));
                out
            }
        })
    }
}
