//! Human-readable JSON form of payloads and transcripts.
//!
//! Field values and polynomial coefficients are decimal strings, arrays run
//! low-to-high, and the file carries the SHA-256 digest of the canonical
//! encoding so edits made outside the library are detected on load.

use serde::{Deserialize, Serialize};

use crate::ff::{FieldElement, Modulus};
use crate::matfield::FieldMat;
use crate::polymat::{PolyMat, Toeplitz};
use crate::upoly::Poly;

use super::message::{Entry, Message, Payload, Sender};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum PayloadJson {
    FieldScalar { value: String },
    FieldVector { values: Vec<String> },
    FieldMatrix { rows: usize, cols: usize, entries: Vec<String> },
    Poly { coeffs: Vec<String> },
    PolyVector { polys: Vec<Vec<String>> },
    PolyMatrix { rows: usize, cols: usize, entries: Vec<Vec<String>> },
    IndexSet { indices: Vec<u64> },
    ToeplitzSpec { rows: usize, cols: usize, spec: Vec<String> },
    RankClaim { rank: u64 },
    Bool { value: bool },
    Shift { values: Vec<i64> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum EntryJson {
    Message { sender: Sender, label: String, payload: PayloadJson },
    Begin { id: String },
    End { id: String },
}

fn dec(x: FieldElement) -> String {
    x.value().to_string()
}

fn poly_json(f: &Poly) -> Vec<String> {
    f.raw().iter().map(|c| c.to_string()).collect()
}

impl From<&Payload> for PayloadJson {
    fn from(p: &Payload) -> PayloadJson {
        match p {
            Payload::FieldScalar(x) => PayloadJson::FieldScalar { value: dec(*x) },
            Payload::FieldVector(v) => PayloadJson::FieldVector { values: v.iter().map(|x| dec(*x)).collect() },
            Payload::FieldMatrix(a) => PayloadJson::FieldMatrix {
                rows: a.rows(),
                cols: a.cols(),
                entries: a.entries().iter().map(|x| dec(*x)).collect(),
            },
            Payload::Poly(f) => PayloadJson::Poly { coeffs: poly_json(f) },
            Payload::PolyVector(v) => PayloadJson::PolyVector { polys: v.iter().map(poly_json).collect() },
            Payload::PolyMatrix(a) => PayloadJson::PolyMatrix {
                rows: a.rows(),
                cols: a.cols(),
                entries: a.entries().iter().map(poly_json).collect(),
            },
            Payload::IndexSet(v) => PayloadJson::IndexSet { indices: v.clone() },
            Payload::ToeplitzSpec(c) => PayloadJson::ToeplitzSpec {
                rows: c.rows(),
                cols: c.cols(),
                spec: c.spec().iter().map(|x| dec(*x)).collect(),
            },
            Payload::RankClaim(r) => PayloadJson::RankClaim { rank: *r },
            Payload::Bool(b) => PayloadJson::Bool { value: *b },
            Payload::Shift(s) => PayloadJson::Shift { values: s.clone() },
        }
    }
}

fn parse_elem(s: &str, p: Modulus) -> Result<FieldElement, String> {
    let v: u64 = s.parse().map_err(|_| format!("{s:?} is not a decimal integer"))?;
    if v >= p.value() {
        return Err(format!("{v} is not reduced mod {p}"));
    }
    Ok(p.elem(v))
}

fn parse_elems(v: &[String], p: Modulus) -> Result<Vec<FieldElement>, String> {
    v.iter().map(|s| parse_elem(s, p)).collect()
}

fn parse_poly(c: &[String], p: Modulus) -> Result<Poly, String> {
    let e = parse_elems(c, p)?;
    if e.last().is_some_and(|x| x.is_zero()) {
        return Err("polynomial has a zero leading coefficient".into());
    }
    Ok(Poly::from_coeffs(p, &e))
}

fn check_cells(rows: usize, cols: usize, got: usize) -> Result<(), String> {
    if rows.checked_mul(cols) != Some(got) {
        return Err(format!("{rows}x{cols} matrix with {got} entries"));
    }
    Ok(())
}

impl PayloadJson {
    pub fn to_payload(&self, p: Modulus) -> Result<Payload, String> {
        Ok(match self {
            PayloadJson::FieldScalar { value } => Payload::FieldScalar(parse_elem(value, p)?),
            PayloadJson::FieldVector { values } => Payload::FieldVector(parse_elems(values, p)?),
            PayloadJson::FieldMatrix { rows, cols, entries } => {
                check_cells(*rows, *cols, entries.len())?;
                let e = parse_elems(entries, p)?;
                Payload::FieldMatrix(FieldMat::from_fn(p, *rows, *cols, |i, j| e[i * cols + j]))
            }
            PayloadJson::Poly { coeffs } => Payload::Poly(parse_poly(coeffs, p)?),
            PayloadJson::PolyVector { polys } => {
                Payload::PolyVector(polys.iter().map(|c| parse_poly(c, p)).collect::<Result<_, _>>()?)
            }
            PayloadJson::PolyMatrix { rows, cols, entries } => {
                check_cells(*rows, *cols, entries.len())?;
                let e: Vec<Poly> = entries.iter().map(|c| parse_poly(c, p)).collect::<Result<_, _>>()?;
                Payload::PolyMatrix(PolyMat::from_fn(p, *rows, *cols, |i, j| e[i * cols + j].clone()))
            }
            PayloadJson::IndexSet { indices } => Payload::IndexSet(indices.clone()),
            PayloadJson::ToeplitzSpec { rows, cols, spec } => {
                let c = Toeplitz::new(*rows, *cols, parse_elems(spec, p)?).map_err(|e| e.to_string())?;
                Payload::ToeplitzSpec(c)
            }
            PayloadJson::RankClaim { rank } => Payload::RankClaim(*rank),
            PayloadJson::Bool { value } => Payload::Bool(*value),
            PayloadJson::Shift { values } => Payload::Shift(values.clone()),
        })
    }
}

impl From<&Entry> for EntryJson {
    fn from(e: &Entry) -> EntryJson {
        match e {
            Entry::Message(m) => EntryJson::Message {
                sender: m.sender,
                label: m.label.clone(),
                payload: (&m.payload).into(),
            },
            Entry::Begin(id) => EntryJson::Begin { id: id.clone() },
            Entry::End(id) => EntryJson::End { id: id.clone() },
        }
    }
}

impl EntryJson {
    pub fn to_entry(&self, p: Modulus) -> Result<Entry, String> {
        Ok(match self {
            EntryJson::Message { sender, label, payload } => Entry::Message(Message {
                sender: *sender,
                label: label.clone(),
                payload: payload.to_payload(p)?,
            }),
            EntryJson::Begin { id } => Entry::Begin(id.clone()),
            EntryJson::End { id } => Entry::End(id.clone()),
        })
    }
}

/// A named public input.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputJson {
    pub name: String,
    pub payload: PayloadJson,
}
