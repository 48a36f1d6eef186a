//! Typed protocol messages and transcript entries.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::ff::FieldElement;
use crate::matfield::FieldMat;
use crate::polymat::{PolyMat, Toeplitz};
use crate::upoly::Poly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Sender {
    Prover,
    Verifier,
}

/// Message contents. Every variant carries its own dimensions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Payload {
    FieldScalar(FieldElement),
    FieldVector(Vec<FieldElement>),
    FieldMatrix(FieldMat),
    Poly(Poly),
    PolyVector(Vec<Poly>),
    PolyMatrix(PolyMat),
    IndexSet(Vec<u64>),
    ToeplitzSpec(Toeplitz),
    RankClaim(u64),
    Bool(bool),
    /// A degree shift; only used for public inputs.
    Shift(Vec<i64>),
}

impl Payload {
    /// Stable tag used by the canonical encoding.
    pub fn tag(&self) -> &'static str {
        match self {
            Payload::FieldScalar(_) => "field_scalar",
            Payload::FieldVector(_) => "field_vector",
            Payload::FieldMatrix(_) => "field_matrix",
            Payload::Poly(_) => "poly",
            Payload::PolyVector(_) => "poly_vector",
            Payload::PolyMatrix(_) => "poly_matrix",
            Payload::IndexSet(_) => "index_set",
            Payload::ToeplitzSpec(_) => "toeplitz_spec",
            Payload::RankClaim(_) => "rank_claim",
            Payload::Bool(_) => "bool",
            Payload::Shift(_) => "shift",
        }
    }

    /// Size in field elements. Indices, ranks and flags count one each, and a
    /// polynomial counts its coefficients (at least one).
    pub fn field_elements(&self) -> usize {
        let poly = |f: &Poly| f.len().max(1);
        match self {
            Payload::FieldScalar(_) | Payload::RankClaim(_) | Payload::Bool(_) => 1,
            Payload::FieldVector(v) => v.len(),
            Payload::FieldMatrix(a) => a.rows() * a.cols(),
            Payload::Poly(f) => poly(f),
            Payload::PolyVector(v) => v.iter().map(poly).sum(),
            Payload::PolyMatrix(a) => a.entries().iter().map(poly).sum(),
            Payload::IndexSet(v) => v.len(),
            Payload::ToeplitzSpec(c) => c.spec().len(),
            Payload::Shift(s) => s.len(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Message {
    pub sender: Sender,
    pub label: String,
    pub payload: Payload,
}

/// One transcript item: a message, or a marker delimiting a sub-protocol.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Entry {
    Message(Message),
    Begin(String),
    End(String),
}

impl Entry {
    pub fn message(&self) -> Option<&Message> {
        match self {
            Entry::Message(m) => Some(m),
            _ => None,
        }
    }
}

/// Why a run was rejected, or `Ok`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Reason {
    Ok,
    DegreeCheckFailed,
    EvaluationCheckFailed,
    RankCheckFailed,
    ShapeCheckFailed,
    SubprotocolRejected { id: String, cause: Box<Reason> },
    MalformedMessage,
    ParamsInvalid,
}

impl Reason {
    /// The innermost non-composite reason.
    pub fn root(&self) -> &Reason {
        match self {
            Reason::SubprotocolRejected { cause, .. } => cause.root(),
            r => r,
        }
    }
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Reason::Ok => write!(f, "ok"),
            Reason::DegreeCheckFailed => write!(f, "degree check failed"),
            Reason::EvaluationCheckFailed => write!(f, "evaluation check failed"),
            Reason::RankCheckFailed => write!(f, "rank check failed"),
            Reason::ShapeCheckFailed => write!(f, "shape check failed"),
            Reason::SubprotocolRejected { id, cause } => write!(f, "{id} rejected: {cause}"),
            Reason::MalformedMessage => write!(f, "malformed message"),
            Reason::ParamsInvalid => write!(f, "invalid parameters"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub accepted: bool,
    pub reason: Reason,
}

impl Verdict {
    pub fn accept() -> Verdict {
        Verdict { accepted: true, reason: Reason::Ok }
    }

    pub fn reject(reason: Reason) -> Verdict {
        debug_assert!(reason != Reason::Ok);
        Verdict { accepted: false, reason }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.accepted {
            write!(f, "ACCEPT")
        } else {
            write!(f, "REJECT ({})", self.reason)
        }
    }
}
