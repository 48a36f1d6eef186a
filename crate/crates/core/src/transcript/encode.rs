//! Canonical byte encoding.
//!
//! Layout: every item starts with a length-prefixed tag string; integers are
//! 8-byte little-endian; a polynomial is its coefficient count followed by
//! the coefficients low-to-high; matrices give their dimensions first and
//! then their entries row-major. The decoder accepts only canonical input
//! (reduced field values, trimmed polynomials, no trailing bytes).

use thiserror::Error;

use crate::ff::{FieldElement, Modulus};
use crate::matfield::FieldMat;
use crate::polymat::{PolyMat, Toeplitz};
use crate::upoly::Poly;

use super::message::{Entry, Message, Payload, Sender};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecodeError {
    #[error("input ends early")]
    Truncated,
    #[error("unknown tag {0:?}")]
    UnknownTag(String),
    #[error("non-canonical value: {0}")]
    NonCanonical(String),
    #[error("{0} trailing bytes")]
    TrailingBytes(usize),
}

pub fn put_u64(buf: &mut Vec<u8>, v: u64) {
    buf.extend_from_slice(&v.to_le_bytes());
}

pub fn put_str(buf: &mut Vec<u8>, s: &str) {
    put_u64(buf, s.len() as u64);
    buf.extend_from_slice(s.as_bytes());
}

fn put_poly(buf: &mut Vec<u8>, f: &Poly) {
    put_u64(buf, f.len() as u64);
    for &c in f.raw() {
        put_u64(buf, c);
    }
}

fn put_elems(buf: &mut Vec<u8>, v: &[FieldElement]) {
    put_u64(buf, v.len() as u64);
    for x in v {
        put_u64(buf, x.value());
    }
}

pub fn encode_payload_into(buf: &mut Vec<u8>, payload: &Payload) {
    put_str(buf, payload.tag());
    match payload {
        Payload::FieldScalar(x) => put_u64(buf, x.value()),
        Payload::FieldVector(v) => put_elems(buf, v),
        Payload::FieldMatrix(a) => {
            put_u64(buf, a.rows() as u64);
            put_u64(buf, a.cols() as u64);
            for x in a.entries() {
                put_u64(buf, x.value());
            }
        }
        Payload::Poly(f) => put_poly(buf, f),
        Payload::PolyVector(v) => {
            put_u64(buf, v.len() as u64);
            v.iter().for_each(|f| put_poly(buf, f));
        }
        Payload::PolyMatrix(a) => {
            put_u64(buf, a.rows() as u64);
            put_u64(buf, a.cols() as u64);
            a.entries().iter().for_each(|f| put_poly(buf, f));
        }
        Payload::IndexSet(v) => {
            put_u64(buf, v.len() as u64);
            v.iter().for_each(|&i| put_u64(buf, i));
        }
        Payload::ToeplitzSpec(c) => {
            put_u64(buf, c.rows() as u64);
            put_u64(buf, c.cols() as u64);
            put_elems(buf, c.spec());
        }
        Payload::RankClaim(r) => put_u64(buf, *r),
        Payload::Bool(b) => put_u64(buf, *b as u64),
        Payload::Shift(s) => {
            put_u64(buf, s.len() as u64);
            s.iter().for_each(|&x| put_u64(buf, x as u64));
        }
    }
}

pub fn encode_payload(payload: &Payload) -> Vec<u8> {
    let mut buf = Vec::new();
    encode_payload_into(&mut buf, payload);
    buf
}

pub fn encode_entry_into(buf: &mut Vec<u8>, entry: &Entry) {
    match entry {
        Entry::Message(m) => {
            put_str(buf, "msg");
            put_u64(buf, matches!(m.sender, Sender::Verifier) as u64);
            put_str(buf, &m.label);
            encode_payload_into(buf, &m.payload);
        }
        Entry::Begin(id) => {
            put_str(buf, "begin");
            put_str(buf, id);
        }
        Entry::End(id) => {
            put_str(buf, "end");
            put_str(buf, id);
        }
    }
}

/// Named public inputs: the count, then `(name, payload)` pairs in order.
pub fn encode_public(inputs: &[(String, Payload)]) -> Vec<u8> {
    let mut buf = Vec::new();
    put_u64(&mut buf, inputs.len() as u64);
    for (name, payload) in inputs {
        put_str(&mut buf, name);
        encode_payload_into(&mut buf, payload);
    }
    buf
}

pub fn encode_entries(entries: &[Entry]) -> Vec<u8> {
    let mut buf = Vec::new();
    put_u64(&mut buf, entries.len() as u64);
    entries.iter().for_each(|e| encode_entry_into(&mut buf, e));
    buf
}

/// Cursor over canonical bytes.
pub struct Reader<'a> {
    bytes: &'a [u8],
    pos: usize,
    p: Modulus,
}

impl<'a> Reader<'a> {
    pub fn new(bytes: &'a [u8], p: Modulus) -> Reader<'a> {
        Reader { bytes, pos: 0, p }
    }

    pub fn u64(&mut self) -> Result<u64, DecodeError> {
        let end = self.pos.checked_add(8).ok_or(DecodeError::Truncated)?;
        let chunk = self.bytes.get(self.pos..end).ok_or(DecodeError::Truncated)?;
        self.pos = end;
        Ok(u64::from_le_bytes(chunk.try_into().expect("8 bytes")))
    }

    /// A length that must be backed by at least `unit` bytes per item, so a
    /// corrupted count cannot trigger a huge allocation.
    fn len(&mut self, unit: usize) -> Result<usize, DecodeError> {
        let n = self.u64()?;
        let left = (self.bytes.len() - self.pos) as u64;
        if n.saturating_mul(unit as u64) > left {
            return Err(DecodeError::Truncated);
        }
        Ok(n as usize)
    }

    pub fn string(&mut self) -> Result<String, DecodeError> {
        let n = self.len(1)?;
        let s = &self.bytes[self.pos..self.pos + n];
        self.pos += n;
        String::from_utf8(s.to_vec()).map_err(|_| DecodeError::NonCanonical("tag is not UTF-8".into()))
    }

    fn elem(&mut self) -> Result<FieldElement, DecodeError> {
        let v = self.u64()?;
        if v >= self.p.value() {
            return Err(DecodeError::NonCanonical(format!("{v} is not reduced mod {}", self.p)));
        }
        Ok(self.p.elem(v))
    }

    fn elems(&mut self) -> Result<Vec<FieldElement>, DecodeError> {
        let n = self.len(8)?;
        (0..n).map(|_| self.elem()).collect()
    }

    fn poly(&mut self) -> Result<Poly, DecodeError> {
        let c = self.elems()?;
        if c.last().is_some_and(|x| x.is_zero()) {
            return Err(DecodeError::NonCanonical("polynomial has a zero leading coefficient".into()));
        }
        Ok(Poly::from_coeffs(self.p, &c))
    }

    fn dims(&mut self, unit: usize) -> Result<(usize, usize), DecodeError> {
        let m = self.u64()? as usize;
        let n = self.u64()? as usize;
        let cells = m.checked_mul(n).ok_or(DecodeError::Truncated)?;
        if cells.saturating_mul(unit) > self.bytes.len() - self.pos {
            return Err(DecodeError::Truncated);
        }
        Ok((m, n))
    }

    pub fn payload(&mut self) -> Result<Payload, DecodeError> {
        let tag = self.string()?;
        let p = self.p;
        Ok(match tag.as_str() {
            "field_scalar" => Payload::FieldScalar(self.elem()?),
            "field_vector" => Payload::FieldVector(self.elems()?),
            "field_matrix" => {
                let (m, n) = self.dims(8)?;
                let e: Vec<FieldElement> = (0..m * n).map(|_| self.elem()).collect::<Result<_, _>>()?;
                Payload::FieldMatrix(FieldMat::from_fn(p, m, n, |i, j| e[i * n + j]))
            }
            "poly" => Payload::Poly(self.poly()?),
            "poly_vector" => {
                let n = self.len(8)?;
                Payload::PolyVector((0..n).map(|_| self.poly()).collect::<Result<_, _>>()?)
            }
            "poly_matrix" => {
                let (m, n) = self.dims(8)?;
                let e: Vec<Poly> = (0..m * n).map(|_| self.poly()).collect::<Result<_, _>>()?;
                Payload::PolyMatrix(PolyMat::from_fn(p, m, n, |i, j| e[i * n + j].clone()))
            }
            "index_set" => {
                let n = self.len(8)?;
                Payload::IndexSet((0..n).map(|_| self.u64()).collect::<Result<_, _>>()?)
            }
            "toeplitz_spec" => {
                let rho = self.u64()? as usize;
                let m = self.u64()? as usize;
                let spec = self.elems()?;
                let c = Toeplitz::new(rho, m, spec).map_err(|e| DecodeError::NonCanonical(e.to_string()))?;
                Payload::ToeplitzSpec(c)
            }
            "rank_claim" => Payload::RankClaim(self.u64()?),
            "bool" => match self.u64()? {
                0 => Payload::Bool(false),
                1 => Payload::Bool(true),
                v => return Err(DecodeError::NonCanonical(format!("boolean {v}"))),
            },
            "shift" => {
                let n = self.len(8)?;
                Payload::Shift((0..n).map(|_| self.u64().map(|x| x as i64)).collect::<Result<_, _>>()?)
            }
            _ => return Err(DecodeError::UnknownTag(tag)),
        })
    }

    pub fn entry(&mut self) -> Result<Entry, DecodeError> {
        let tag = self.string()?;
        Ok(match tag.as_str() {
            "msg" => {
                let sender = match self.u64()? {
                    0 => Sender::Prover,
                    1 => Sender::Verifier,
                    v => return Err(DecodeError::NonCanonical(format!("sender {v}"))),
                };
                let label = self.string()?;
                let payload = self.payload()?;
                Entry::Message(Message { sender, label, payload })
            }
            "begin" => Entry::Begin(self.string()?),
            "end" => Entry::End(self.string()?),
            _ => return Err(DecodeError::UnknownTag(tag)),
        })
    }

    pub fn finish(self) -> Result<(), DecodeError> {
        match self.bytes.len() - self.pos {
            0 => Ok(()),
            k => Err(DecodeError::TrailingBytes(k)),
        }
    }
}

pub fn decode_payload(bytes: &[u8], p: Modulus) -> Result<Payload, DecodeError> {
    let mut r = Reader::new(bytes, p);
    let v = r.payload()?;
    r.finish()?;
    Ok(v)
}

pub fn decode_public(bytes: &[u8], p: Modulus) -> Result<Vec<(String, Payload)>, DecodeError> {
    let mut r = Reader::new(bytes, p);
    let n = r.len(16)?;
    let mut out = Vec::with_capacity(n);
    for _ in 0..n {
        let name = r.string()?;
        out.push((name, r.payload()?));
    }
    r.finish()?;
    Ok(out)
}

pub fn decode_entries(bytes: &[u8], p: Modulus) -> Result<Vec<Entry>, DecodeError> {
    let mut r = Reader::new(bytes, p);
    let n = r.len(16)?;
    let out = (0..n).map(|_| r.entry()).collect::<Result<Vec<_>, _>>()?;
    r.finish()?;
    Ok(out)
}
