//! Verifier state machines.
//!
//! Each function runs one protocol against a [`Prover`] through a [`Session`]
//! and returns `Ok(())` on acceptance. Nested protocols are entered with
//! [`Session::sub`]. Code here is restricted to evaluations, field linear
//! algebra, polynomial degrees and the local normal-form shape checks.

mod forms;
mod linear;
mod rowspace;

pub use forms::{hermite, kernel_basis, sat_basis, saturated, spopov, unimod_completable};
pub use linear::{
    determinant, field_det, inverse, matmul, nonsingularity, rank, rank_lb, rank_ub, singularity, system_solve,
};
pub use rowspace::{coprime, frrsm, row_basis, rs_equality, rs_subset, rsm};

use crate::ff::FieldElement;
use crate::matfield::FieldMat;
use crate::polymat::Toeplitz;
use crate::transcript::{Payload, Reason};
use crate::upoly::Poly;

use super::{reject, Halt};


pub(crate) fn scalar(p: Payload) -> Result<FieldElement, Halt> {
    match p {
        Payload::FieldScalar(x) => Ok(x),
        _ => reject(Reason::MalformedMessage),
    }
}

/// A field vector of exactly `len` entries.
pub(crate) fn vector(p: Payload, len: usize) -> Result<Vec<FieldElement>, Halt> {
    match p {
        Payload::FieldVector(v) if v.len() == len => Ok(v),
        _ => reject(Reason::MalformedMessage),
    }
}

pub(crate) fn poly(p: Payload) -> Result<Poly, Halt> {
    match p {
        Payload::Poly(f) => Ok(f),
        _ => reject(Reason::MalformedMessage),
    }
}

pub(crate) fn poly_vector(p: Payload, len: usize) -> Result<Vec<Poly>, Halt> {
    match p {
        Payload::PolyVector(v) if v.len() == len => Ok(v),
        _ => reject(Reason::MalformedMessage),
    }
}

pub(crate) fn field_matrix(p: Payload) -> Result<FieldMat, Halt> {
    match p {
        Payload::FieldMatrix(a) => Ok(a),
        _ => reject(Reason::MalformedMessage),
    }
}

pub(crate) fn index_set(p: Payload) -> Result<Vec<usize>, Halt> {
    match p {
        Payload::IndexSet(v) => Ok(v.into_iter().map(|k| usize::try_from(k).unwrap_or(usize::MAX)).collect()),
        _ => reject(Reason::MalformedMessage),
    }
}

pub(crate) fn toeplitz(p: Payload) -> Result<Toeplitz, Halt> {
    match p {
        Payload::ToeplitzSpec(c) => Ok(c),
        _ => reject(Reason::MalformedMessage),
    }
}

pub(crate) fn rank_claim(p: Payload) -> Result<u64, Halt> {
    match p {
        Payload::RankClaim(r) => Ok(r),
        _ => reject(Reason::MalformedMessage),
    }
}

/// `max(d, 0)` for a degree that may be `NEG_INF`.
pub(crate) fn clamp0(d: i64) -> i64 {
    d.max(0)
}
