//! Protocol messages, transcripts, canonical encoding and challenge sources.

mod challenge;
pub mod encode;
mod json;
mod message;

use std::path::Path;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::ff::Modulus;

pub use challenge::{ChallengeSource, Mode, DOMAIN_PREFIX};
pub use encode::{decode_entries, decode_payload, decode_public, encode_entries, encode_payload, encode_public, DecodeError};
pub use json::{EntryJson, InputJson, PayloadJson};
pub use message::{Entry, Message, Payload, Reason, Sender, Verdict};

use encode::{put_str, put_u64};

pub const FORMAT: &str = "polycert-transcript/v1";

#[derive(Debug, Error)]
pub enum TranscriptError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("digest mismatch: file says {stored}, contents hash to {computed}")]
    DigestMismatch { stored: String, computed: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// A soundness bound `numerator / denominator`, kept exact.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bound {
    pub numerator: u64,
    pub denominator: u64,
}

impl Bound {
    pub fn value(self) -> f64 {
        self.numerator as f64 / self.denominator as f64
    }
}

/// A complete record of one top-level run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transcript {
    pub protocol_id: String,
    pub modulus: Modulus,
    pub sigma: u64,
    pub mode: Mode,
    pub strict: bool,
    pub public_inputs: Vec<(String, Payload)>,
    pub entries: Vec<Entry>,
    /// Present iff the run completed.
    pub verdict: Option<Verdict>,
    /// Theoretical soundness error recorded for the run.
    pub soundness_bound: Option<Bound>,
}

#[derive(Serialize, Deserialize)]
struct TranscriptFile {
    format: String,
    protocol: String,
    modulus: String,
    sigma: String,
    mode: Mode,
    strict: bool,
    public_inputs: Vec<InputJson>,
    entries: Vec<EntryJson>,
    verdict: Option<Verdict>,
    soundness_bound: Option<Bound>,
    digest: String,
}

fn put_reason(buf: &mut Vec<u8>, r: &Reason) {
    match r {
        Reason::SubprotocolRejected { id, cause } => {
            put_str(buf, "subprotocol_rejected");
            put_str(buf, id);
            put_reason(buf, cause);
        }
        other => put_str(buf, &format!("{other:?}")),
    }
}

impl Transcript {
    pub fn public_bytes(&self) -> Vec<u8> {
        encode_public(&self.public_inputs)
    }

    /// Canonical encoding of every field of the transcript.
    pub fn canonical_bytes(&self) -> Vec<u8> {
        let mut buf = Vec::new();
        put_str(&mut buf, FORMAT);
        put_str(&mut buf, &self.protocol_id);
        put_u64(&mut buf, self.modulus.value());
        put_u64(&mut buf, self.sigma);
        match self.mode {
            Mode::Interactive { seed } => {
                put_str(&mut buf, "interactive");
                put_u64(&mut buf, seed);
            }
            Mode::FiatShamir => put_str(&mut buf, "fiat_shamir"),
        }
        put_u64(&mut buf, self.strict as u64);
        buf.extend(self.public_bytes());
        buf.extend(encode_entries(&self.entries));
        match &self.verdict {
            None => put_u64(&mut buf, 0),
            Some(v) => {
                put_u64(&mut buf, 1);
                put_u64(&mut buf, v.accepted as u64);
                put_reason(&mut buf, &v.reason);
            }
        }
        match self.soundness_bound {
            None => put_u64(&mut buf, 0),
            Some(b) => {
                put_u64(&mut buf, 1);
                put_u64(&mut buf, b.numerator);
                put_u64(&mut buf, b.denominator);
            }
        }
        buf
    }

    pub fn digest(&self) -> String {
        hex::encode(Sha256::digest(self.canonical_bytes()))
    }

    pub fn messages(&self) -> impl Iterator<Item = &Message> {
        self.entries.iter().filter_map(Entry::message)
    }

    /// Field elements sent by the Prover and by the Verifier.
    pub fn communication(&self) -> (usize, usize) {
        let mut out = (0, 0);
        for m in self.messages() {
            match m.sender {
                Sender::Prover => out.0 += m.payload.field_elements(),
                Sender::Verifier => out.1 += m.payload.field_elements(),
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        let file = TranscriptFile {
            format: FORMAT.into(),
            protocol: self.protocol_id.clone(),
            modulus: self.modulus.value().to_string(),
            sigma: self.sigma.to_string(),
            mode: self.mode,
            strict: self.strict,
            public_inputs: self
                .public_inputs
                .iter()
                .map(|(name, p)| InputJson { name: name.clone(), payload: p.into() })
                .collect(),
            entries: self.entries.iter().map(Into::into).collect(),
            verdict: self.verdict.clone(),
            soundness_bound: self.soundness_bound,
            digest: self.digest(),
        };
        let mut s = serde_json::to_string_pretty(&file).expect("serializable");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Transcript, TranscriptError> {
        let parse = |e: String| TranscriptError::Parse(e);
        let file: TranscriptFile = serde_json::from_str(text).map_err(|e| parse(e.to_string()))?;
        if file.format != FORMAT {
            return Err(parse(format!("unknown format {:?}", file.format)));
        }
        let p: u64 = file.modulus.parse().map_err(|_| parse("modulus is not an integer".into()))?;
        let modulus = Modulus::new(p).map_err(|e| parse(e.to_string()))?;
        let sigma: u64 = file.sigma.parse().map_err(|_| parse("sigma is not an integer".into()))?;
        let public_inputs = file
            .public_inputs
            .iter()
            .map(|i| i.payload.to_payload(modulus).map(|p| (i.name.clone(), p)))
            .collect::<Result<Vec<_>, _>>()
            .map_err(parse)?;
        let entries = file
            .entries
            .iter()
            .map(|e| e.to_entry(modulus))
            .collect::<Result<Vec<_>, _>>()
            .map_err(parse)?;
        let t = Transcript {
            protocol_id: file.protocol,
            modulus,
            sigma,
            mode: file.mode,
            strict: file.strict,
            public_inputs,
            entries,
            verdict: file.verdict,
            soundness_bound: file.soundness_bound,
        };
        let computed = t.digest();
        if computed != file.digest {
            return Err(TranscriptError::DigestMismatch { stored: file.digest, computed });
        }
        Ok(t)
    }

    pub fn save(&self, path: &Path) -> Result<(), TranscriptError> {
        std::fs::write(path, self.to_json())?;
        Ok(())
    }

    pub fn load(path: &Path) -> Result<Transcript, TranscriptError> {
        Transcript::from_json(&std::fs::read_to_string(path)?)
    }
}

#[cfg(test)]
mod tests;
