//! Top-level claims, their parameter bounds, and running or replaying them.

use crate::ff::{FieldElement, Modulus};
use crate::matfield::FieldMat;
use crate::polymat::{PolyMat, Shift};
use crate::transcript::{encode_public, Bound, Payload, Reason, Transcript, Verdict};
use crate::upoly::Poly;

use super::oracle::PolyVec;
use super::{verifier as v, Halt, NoProver, Params, ProtocolError, Prover, Session};

/// A claim together with its public inputs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Statement {
    Singularity { a: PolyMat },
    Nonsingularity { a: PolyMat },
    RankLb { a: PolyMat, rho: usize },
    RankUb { a: PolyMat, rho: usize },
    Rank { a: PolyMat, rho: usize },
    Determinant { a: PolyMat, delta: Poly },
    FieldDet { b: FieldMat, beta: FieldElement },
    SystemSolve { a: PolyMat, b: Vec<Poly>, v: Vec<Poly>, delta: Poly },
    MatMul { a: PolyMat, b: PolyMat, c: PolyMat },
    Inverse { a: PolyMat, b: PolyMat },
    Frrsm { a: PolyMat, v: Vec<Poly> },
    Coprime { fs: Vec<Poly> },
    Rsm { a: PolyMat, v: Vec<Poly> },
    RsSubset { a: PolyMat, b: PolyMat },
    RsEquality { a: PolyMat, b: PolyMat },
    RowBasis { a: PolyMat, b: PolyMat },
    Hermite { a: PolyMat, h: PolyMat },
    Spopov { a: PolyMat, shift: Shift, p: PolyMat },
    Saturated { a: PolyMat },
    SatBasis { a: PolyMat, b: PolyMat },
    UnimodCompletable { a: PolyMat },
    KernelBasis { a: PolyMat, b: PolyMat },
}

/// Result of a completed run.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub verdict: Verdict,
    pub transcript: Transcript,
}

fn invalid(msg: impl Into<String>) -> ProtocolError {
    ProtocolError::ParamsInvalid(msg.into())
}

/// `max(1, deg)`, the degree used in parameter bounds.
fn wd(deg: i64) -> u128 {
    deg.max(1) as u128
}

fn wdv(v: &[Poly]) -> u128 {
    wd(v.iter().map(Poly::deg).max().unwrap_or(0))
}

fn small(a: &PolyMat) -> u128 {
    a.rows().min(a.cols()) as u128
}

impl Statement {
    pub fn id(&self) -> &'static str {
        match self {
            Statement::Singularity { .. } => "singularity",
            Statement::Nonsingularity { .. } => "nonsingularity",
            Statement::RankLb { .. } => "rank_lb",
            Statement::RankUb { .. } => "rank_ub",
            Statement::Rank { .. } => "rank",
            Statement::Determinant { .. } => "determinant",
            Statement::FieldDet { .. } => "field_det",
            Statement::SystemSolve { .. } => "system_solve",
            Statement::MatMul { .. } => "matmul",
            Statement::Inverse { .. } => "inverse",
            Statement::Frrsm { .. } => "frrsm",
            Statement::Coprime { .. } => "coprime",
            Statement::Rsm { .. } => "rsm",
            Statement::RsSubset { .. } => "rs_subset",
            Statement::RsEquality { .. } => "rs_equality",
            Statement::RowBasis { .. } => "row_basis",
            Statement::Hermite { .. } => "hermite",
            Statement::Spopov { .. } => "spopov",
            Statement::Saturated { .. } => "saturated",
            Statement::SatBasis { .. } => "sat_basis",
            Statement::UnimodCompletable { .. } => "unimod_completable",
            Statement::KernelBasis { .. } => "kernel_basis",
        }
    }

    /// Named public inputs, in the order they are hashed.
    pub fn public_inputs(&self) -> Vec<(String, Payload)> {
        let m = |a: &PolyMat| Payload::PolyMatrix(a.clone());
        let rank = |r: &usize| Payload::RankClaim(*r as u64);
        let pv = |v: &[Poly]| Payload::PolyVector(v.to_vec());
        let named = |v: Vec<(&str, Payload)>| v.into_iter().map(|(k, p)| (k.to_string(), p)).collect();
        match self {
            Statement::Singularity { a }
            | Statement::Nonsingularity { a }
            | Statement::Saturated { a }
            | Statement::UnimodCompletable { a } => named(vec![("A", m(a))]),
            Statement::RankLb { a, rho } | Statement::RankUb { a, rho } | Statement::Rank { a, rho } => {
                named(vec![("A", m(a)), ("rho", rank(rho))])
            }
            Statement::Determinant { a, delta } => named(vec![("A", m(a)), ("delta", Payload::Poly(delta.clone()))]),
            Statement::FieldDet { b, beta } => {
                named(vec![("B", Payload::FieldMatrix(b.clone())), ("beta", Payload::FieldScalar(*beta))])
            }
            Statement::SystemSolve { a, b, v, delta } => named(vec![
                ("A", m(a)),
                ("b", pv(b)),
                ("v", pv(v)),
                ("delta", Payload::Poly(delta.clone())),
            ]),
            Statement::MatMul { a, b, c } => named(vec![("A", m(a)), ("B", m(b)), ("C", m(c))]),
            Statement::Frrsm { a, v } | Statement::Rsm { a, v } => named(vec![("A", m(a)), ("v", pv(v))]),
            Statement::Coprime { fs } => named(vec![("f", pv(fs))]),
            Statement::Inverse { a, b }
            | Statement::RsSubset { a, b }
            | Statement::RsEquality { a, b }
            | Statement::RowBasis { a, b }
            | Statement::SatBasis { a, b }
            | Statement::KernelBasis { a, b } => named(vec![("A", m(a)), ("B", m(b))]),
            Statement::Hermite { a, h } => named(vec![("A", m(a)), ("H", m(h))]),
            Statement::Spopov { a, shift, p } => {
                named(vec![("A", m(a)), ("shift", Payload::Shift(shift.0.clone())), ("P", m(p))])
            }
        }
    }

    /// Rebuilds a statement from a protocol id and named public inputs.
    pub fn from_public(id: &str, inputs: &[(String, Payload)]) -> Result<Statement, ProtocolError> {
        let get = |name: &str| {
            inputs
                .iter()
                .find(|(k, _)| k == name)
                .map(|(_, p)| p.clone())
                .ok_or_else(|| invalid(format!("missing public input {name:?}")))
        };
        let mat = |name: &str| match get(name)? {
            Payload::PolyMatrix(a) => Ok(a),
            _ => Err(invalid(format!("{name:?} must be a polynomial matrix"))),
        };
        let polys = |name: &str| match get(name)? {
            Payload::PolyVector(v) => Ok(v),
            _ => Err(invalid(format!("{name:?} must be a polynomial vector"))),
        };
        let poly = |name: &str| match get(name)? {
            Payload::Poly(f) => Ok(f),
            _ => Err(invalid(format!("{name:?} must be a polynomial"))),
        };
        let rho = || match get("rho")? {
            Payload::RankClaim(r) => usize::try_from(r).map_err(|_| invalid("rank claim too large")),
            _ => Err(invalid("\"rho\" must be a rank claim")),
        };
        Ok(match id {
            "singularity" => Statement::Singularity { a: mat("A")? },
            "nonsingularity" => Statement::Nonsingularity { a: mat("A")? },
            "rank_lb" => Statement::RankLb { a: mat("A")?, rho: rho()? },
            "rank_ub" => Statement::RankUb { a: mat("A")?, rho: rho()? },
            "rank" => Statement::Rank { a: mat("A")?, rho: rho()? },
            "determinant" => Statement::Determinant { a: mat("A")?, delta: poly("delta")? },
            "field_det" => {
                let b = match get("B")? {
                    Payload::FieldMatrix(b) => b,
                    _ => return Err(invalid("\"B\" must be a field matrix")),
                };
                let beta = match get("beta")? {
                    Payload::FieldScalar(x) => x,
                    _ => return Err(invalid("\"beta\" must be a field element")),
                };
                Statement::FieldDet { b, beta }
            }
            "system_solve" => Statement::SystemSolve {
                a: mat("A")?,
                b: polys("b")?,
                v: polys("v")?,
                delta: poly("delta")?,
            },
            "matmul" => Statement::MatMul { a: mat("A")?, b: mat("B")?, c: mat("C")? },
            "inverse" => Statement::Inverse { a: mat("A")?, b: mat("B")? },
            "frrsm" => Statement::Frrsm { a: mat("A")?, v: polys("v")? },
            "coprime" => Statement::Coprime { fs: polys("f")? },
            "rsm" => Statement::Rsm { a: mat("A")?, v: polys("v")? },
            "rs_subset" => Statement::RsSubset { a: mat("A")?, b: mat("B")? },
            "rs_equality" => Statement::RsEquality { a: mat("A")?, b: mat("B")? },
            "row_basis" => Statement::RowBasis { a: mat("A")?, b: mat("B")? },
            "hermite" => Statement::Hermite { a: mat("A")?, h: mat("H")? },
            "spopov" => {
                let shift = match get("shift")? {
                    Payload::Shift(s) => Shift(s),
                    _ => return Err(invalid("\"shift\" must be a shift")),
                };
                Statement::Spopov { a: mat("A")?, shift, p: mat("P")? }
            }
            "saturated" => Statement::Saturated { a: mat("A")? },
            "sat_basis" => Statement::SatBasis { a: mat("A")?, b: mat("B")? },
            "unimod_completable" => Statement::UnimodCompletable { a: mat("A")? },
            "kernel_basis" => Statement::KernelBasis { a: mat("A")?, b: mat("B")? },
            other => return Err(ProtocolError::UnknownProtocol(other.into())),
        })
    }

    /// Dimension and modulus preconditions.
    pub fn validate(&self, p: Modulus) -> Result<(), ProtocolError> {
        let square = |a: &PolyMat, what: &str| {
            if a.rows() == a.cols() {
                Ok(())
            } else {
                Err(invalid(format!("{what} must be square, got {}x{}", a.rows(), a.cols())))
            }
        };
        let same_cols = |a: &PolyMat, b: &PolyMat| {
            if a.cols() == b.cols() {
                Ok(())
            } else {
                Err(invalid(format!("column dimensions differ: {} vs {}", a.cols(), b.cols())))
            }
        };
        let len = |v: &[Poly], n: usize, what: &str| {
            if v.len() == n {
                Ok(())
            } else {
                Err(invalid(format!("{what} has length {}, expected {n}", v.len())))
            }
        };
        let payloads = self.public_inputs();
        let foreign = payloads.iter().any(|(_, pl)| match pl {
            Payload::PolyMatrix(a) => a.modulus() != p,
            Payload::FieldMatrix(a) => a.modulus() != p,
            Payload::Poly(f) => f.modulus() != p,
            Payload::PolyVector(v) => v.iter().any(|f| f.modulus() != p),
            Payload::FieldScalar(x) => x.modulus() != p,
            _ => false,
        });
        if foreign {
            return Err(invalid(format!("public inputs are not over GF({p})")));
        }
        match self {
            Statement::Singularity { a } | Statement::Nonsingularity { a } | Statement::Determinant { a, .. } => {
                square(a, "A")
            }
            Statement::FieldDet { b, .. } => {
                if b.rows() == b.cols() {
                    Ok(())
                } else {
                    Err(invalid("B must be square"))
                }
            }
            Statement::SystemSolve { a, b, v, .. } => {
                len(b, a.rows(), "b")?;
                len(v, a.cols(), "v")
            }
            Statement::MatMul { a, b, c } => {
                if a.cols() != b.rows() || c.rows() != a.rows() || c.cols() != b.cols() {
                    return Err(invalid("incompatible product dimensions"));
                }
                Ok(())
            }
            Statement::Inverse { a, b } => {
                square(a, "A")?;
                square(b, "B")?;
                if a.rows() != b.rows() {
                    return Err(invalid("A and B differ in size"));
                }
                Ok(())
            }
            Statement::Frrsm { a, v } | Statement::Rsm { a, v } => len(v, a.cols(), "v"),
            Statement::Coprime { fs } => {
                if fs.is_empty() {
                    Err(invalid("at least one polynomial is needed"))
                } else {
                    Ok(())
                }
            }
            Statement::RsSubset { a, b }
            | Statement::RsEquality { a, b }
            | Statement::RowBasis { a, b }
            | Statement::SatBasis { a, b } => same_cols(a, b),
            Statement::Hermite { a, h } => same_cols(a, h),
            Statement::Spopov { a, shift, p } => {
                same_cols(a, p)?;
                if shift.len() != a.cols() {
                    return Err(invalid("shift length differs from the column dimension"));
                }
                Ok(())
            }
            Statement::KernelBasis { a, b } => {
                if b.cols() != a.rows() {
                    return Err(invalid("B must have as many columns as A has rows"));
                }
                Ok(())
            }
            Statement::RankLb { .. }
            | Statement::RankUb { .. }
            | Statement::Rank { .. }
            | Statement::Saturated { .. }
            | Statement::UnimodCompletable { .. } => Ok(()),
        }
    }

    /// The smallest `#S` allowed in strict mode. `n`, `m`, `r` and `d` are the
    /// largest column dimension, row dimension, rank (or claimed rank) and
    /// degree among the input matrices and vectors.
    pub fn strict_bound(&self) -> u128 {
        match self {
            Statement::Singularity { a } => 2 * a.rows() as u128 * wd(a.deg()),
            Statement::Nonsingularity { a } => a.rows() as u128 * wd(a.deg()) + 1,
            Statement::RankLb { a, rho } => (*rho as u128).max(small(a)) * wd(a.deg()) + 1,
            Statement::RankUb { a, rho } | Statement::Rank { a, rho } => {
                2 * (*rho as u128).max(small(a)) * wd(a.deg()) + 2
            }
            Statement::Determinant { a, .. } => 2 * a.rows() as u128 * wd(a.deg()) + 2,
            Statement::FieldDet { .. } => 2,
            Statement::SystemSolve { a, b, v, delta } => {
                4 * wd(a.deg()).max(wdv(b)).max(wdv(v)).max(wd(delta.deg()))
            }
            Statement::MatMul { a, b, c } => 4 * wd(a.deg()).max(wd(b.deg())).max(wd(c.deg())) + 2,
            Statement::Inverse { a, b } => 4 * wd(a.deg()).max(wd(b.deg())) + 2,
            Statement::Frrsm { a, v } => {
                let d = wd(a.deg()).max(wdv(v));
                6 * a.rows() as u128 * d + 2 * d + 2
            }
            Statement::Coprime { fs } => 2 * wdv(fs),
            Statement::Rsm { a, v } => {
                let d = wd(a.deg()).max(wdv(v));
                8 * small(a) * d + 2 * d + 2
            }
            Statement::RsSubset { a, b } | Statement::RsEquality { a, b } => pair_bound(a, b, 4),
            Statement::Hermite { a, h: b } | Statement::Spopov { a, p: b, .. } => pair_bound(a, b, 4),
            Statement::RowBasis { a, b } => pair_bound(a, b, 6),
            Statement::Saturated { a } => 8 * small(a) * wd(a.deg()) + 4,
            Statement::SatBasis { a, b } => {
                let d = wd(a.deg()).max(wd(b.deg()));
                8 * a.cols() as u128 * d + 2 * d + 4
            }
            Statement::UnimodCompletable { a } => 8 * a.rows() as u128 * wd(a.deg()) + 4,
            Statement::KernelBasis { a, b } => {
                let d = wd(a.deg()).max(wd(b.deg()));
                8 * a.rows().max(b.rows()) as u128 * d + 4
            }
        }
    }

    /// Numerator of the soundness error; the error is this over `#S`.
    pub fn soundness_numerator(&self) -> u128 {
        match self {
            Statement::Singularity { a } => a.rows() as u128 * wd(a.deg()),
            Statement::Nonsingularity { .. } | Statement::RankLb { .. } | Statement::FieldDet { .. } => 1,
            Statement::RankUb { a, rho } | Statement::Rank { a, rho } => {
                (*rho as u128).max(small(a)) * wd(a.deg()) + 1
            }
            Statement::Determinant { a, .. } => a.rows() as u128 * wd(a.deg()) + 1,
            Statement::SystemSolve { a, b, v, delta } => {
                2 * wd(a.deg()).max(wdv(b)).max(wdv(v)).max(wd(delta.deg()))
            }
            Statement::MatMul { a, b, .. } => wd(a.deg()) + wd(b.deg()) + 1,
            Statement::Inverse { a, b } => 2 * wd(a.deg()).max(wd(b.deg())) + 1,
            Statement::Frrsm { a, v } => 3 * a.rows() as u128 * wd(a.deg()) + wdv(v) + 1,
            Statement::Coprime { fs } => 2 * wdv(fs) - 1,
            Statement::Rsm { a, v } => 4 * small(a) * wd(a.deg()) + wdv(v) + 1,
            Statement::RsSubset { a, b } => 4 * small(b) * wd(b.deg()) + wd(a.deg()) + 2,
            Statement::RsEquality { a, b } | Statement::Hermite { a, h: b } | Statement::Spopov { a, p: b, .. } => {
                let (r, d) = (small(a).max(small(b)), wd(a.deg()).max(wd(b.deg())));
                4 * r * d + d + 2
            }
            Statement::RowBasis { a, b } => {
                let (r, d) = (small(a).max(small(b)), wd(a.deg()).max(wd(b.deg())));
                4 * r * d + d + 3
            }
            Statement::Saturated { a } => 4 * small(a) * wd(a.deg()) + 2,
            Statement::SatBasis { a, b } => 4 * b.rows() as u128 * wd(b.deg()) + wd(a.deg()) + 2,
            Statement::UnimodCompletable { a } => 4 * a.rows() as u128 * wd(a.deg()) + 2,
            Statement::KernelBasis { a, b } => {
                let (da, db) = (wd(a.deg()), wd(b.deg()));
                (da + db + 1).max(4 * b.rows() as u128 * db + 2)
            }
        }
    }

    /// Runs the Verifier of this statement against `pr`.
    pub fn execute(&self, s: &mut Session, pr: &mut dyn Prover) -> Result<(), Halt> {
        let p = s.modulus();
        match self {
            Statement::Singularity { a } => v::singularity(s, pr, a),
            Statement::Nonsingularity { a } => v::nonsingularity(s, pr, a),
            Statement::RankLb { a, rho } => v::rank_lb(s, pr, a, *rho),
            Statement::RankUb { a, rho } => v::rank_ub(s, pr, a, *rho),
            Statement::Rank { a, rho } => v::rank(s, pr, a, *rho),
            Statement::Determinant { a, delta } => v::determinant(s, pr, a, delta),
            Statement::FieldDet { b, beta } => v::field_det(s, pr, b, *beta),
            Statement::SystemSolve { a, b, v: x, delta } => v::system_solve(s, a, b, x, delta),
            Statement::MatMul { a, b, c } => v::matmul(s, a, b, c),
            Statement::Inverse { a, b } => v::inverse(s, a, b),
            Statement::Frrsm { a, v: x } => v::frrsm(s, pr, a, &PolyVec { p, v: x }),
            Statement::Coprime { fs } => v::coprime(s, pr, fs),
            Statement::Rsm { a, v: x } => v::rsm(s, pr, a, &PolyVec { p, v: x }),
            Statement::RsSubset { a, b } => v::rs_subset(s, pr, a, b),
            Statement::RsEquality { a, b } => v::rs_equality(s, pr, a, b),
            Statement::RowBasis { a, b } => v::row_basis(s, pr, a, b),
            Statement::Hermite { a, h } => v::hermite(s, pr, a, h),
            Statement::Spopov { a, shift, p: pm } => v::spopov(s, pr, a, shift, pm),
            Statement::Saturated { a } => v::saturated(s, pr, a),
            Statement::SatBasis { a, b } => v::sat_basis(s, pr, a, b),
            Statement::UnimodCompletable { a } => v::unimod_completable(s, pr, a),
            Statement::KernelBasis { a, b } => v::kernel_basis(s, pr, a, b),
        }
    }

    /// The recorded soundness error for a run with sample size `sigma`.
    pub fn soundness_bound(&self, sigma: u64) -> Bound {
        let num = u64::try_from(self.soundness_numerator()).unwrap_or(u64::MAX);
        Bound { numerator: num, denominator: sigma }
    }

    /// Fails with `ParamsInvalid` when strict mode forbids `sigma`.
    pub fn check_strict(&self, params: &Params) -> Result<(), ProtocolError> {
        let need = self.strict_bound();
        if params.strict && (params.sigma() as u128) < need {
            return Err(invalid(format!(
                "{} needs #S >= {need} in strict mode, got {}",
                self.id(),
                params.sigma()
            )));
        }
        Ok(())
    }
}

fn pair_bound(a: &PolyMat, b: &PolyMat, c: u128) -> u128 {
    let r = small(a).max(small(b));
    let d = wd(a.deg()).max(wd(b.deg()));
    8 * r * d + 2 * d + c
}

/// Runs `statement` against `prover` and records the transcript. A Prover
/// that gives up, or invalid parameters, is an error rather than a verdict.
pub fn run(statement: &Statement, params: Params, prover: &mut dyn Prover) -> Result<Outcome, ProtocolError> {
    statement.validate(params.modulus)?;
    statement.check_strict(&params)?;
    let public = statement.public_inputs();
    let mut s = Session::live(params, statement.id(), &encode_public(&public));
    let verdict = match statement.execute(&mut s, prover) {
        Ok(()) => Verdict::accept(),
        Err(Halt::Reject(r)) => Verdict::reject(r),
        Err(Halt::Abort(e)) => return Err(e),
    };
    let transcript = Transcript {
        protocol_id: statement.id().into(),
        modulus: params.modulus,
        sigma: params.sigma(),
        mode: params.mode,
        strict: params.strict,
        public_inputs: public,
        entries: s.into_entries(),
        verdict: Some(verdict.clone()),
        soundness_bound: Some(statement.soundness_bound(params.sigma())),
    };
    Ok(Outcome { verdict, transcript })
}

/// Re-runs the Verifier over a stored transcript: Prover messages are read
/// back, challenges are recomputed or range-checked, and every recorded entry
/// must be consumed.
pub fn verify_transcript(t: &Transcript) -> Result<Verdict, ProtocolError> {
    let params = Params::new(t.modulus, t.sigma, t.mode, t.strict)?;
    let statement = Statement::from_public(&t.protocol_id, &t.public_inputs)?;
    if statement.validate(t.modulus).is_err() || statement.check_strict(&params).is_err() {
        return Ok(Verdict::reject(Reason::ParamsInvalid));
    }
    let public = encode_public(&t.public_inputs);
    let mut s = Session::replay(params, &t.protocol_id, &public, t.entries.clone());
    match statement.execute(&mut s, &mut NoProver) {
        Ok(()) if s.replay_exhausted() => Ok(Verdict::accept()),
        Ok(()) => Ok(Verdict::reject(Reason::MalformedMessage)),
        Err(Halt::Reject(r)) => Ok(Verdict::reject(r)),
        Err(Halt::Abort(e)) => Err(e),
    }
}
