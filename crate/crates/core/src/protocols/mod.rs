//! Verifiers and honest Provers for every certificate, composed through a
//! shared [`Session`].
//!
//! Verifier code lives in [`verifier`] and only touches evaluations, field
//! linear algebra, polynomial degrees and the local shape checks. The Prover
//! side ([`prover`]) is where the heavy polynomial-matrix machinery runs.

mod oracle;
mod params;
pub mod prover;
mod session;
mod statement;
pub mod verifier;

use thiserror::Error;

pub use oracle::{MatrixOracle, PolyVec, ScaledVector, Submatrix, ToeplitzTimes, VectorOracle};
pub use params::{rsm_repetitions, Params};
pub use prover::{Honest, NoProver, Prover, Request};
pub use session::Session;
pub use statement::{run, verify_transcript, Outcome, Statement};

use crate::transcript::Reason;

/// Stable protocol identifiers, as they appear in transcripts and the CLI.
pub const PROTOCOL_IDS: [&str; 22] = [
    "singularity",
    "nonsingularity",
    "rank_lb",
    "rank_ub",
    "rank",
    "determinant",
    "field_det",
    "system_solve",
    "matmul",
    "inverse",
    "frrsm",
    "coprime",
    "rsm",
    "rs_subset",
    "rs_equality",
    "row_basis",
    "hermite",
    "spopov",
    "saturated",
    "sat_basis",
    "unimod_completable",
    "kernel_basis",
];

/// Failures that are not a Verifier decision.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProtocolError {
    #[error("invalid parameters: {0}")]
    ParamsInvalid(String),
    #[error("prover gave up: {0}")]
    ProverGaveUp(String),
    #[error("unknown protocol {0:?}")]
    UnknownProtocol(String),
    #[error("internal error: {0}")]
    Internal(String),
}

/// Why a run stopped early.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Halt {
    Reject(Reason),
    Abort(ProtocolError),
}

impl From<ProtocolError> for Halt {
    fn from(e: ProtocolError) -> Halt {
        Halt::Abort(e)
    }
}

pub(crate) fn reject<T>(r: Reason) -> Result<T, Halt> {
    Err(Halt::Reject(r))
}

/// Fails with `r` unless `ok`.
pub(crate) fn ensure(ok: bool, r: Reason) -> Result<(), Halt> {
    if ok {
        Ok(())
    } else {
        reject(r)
    }
}
