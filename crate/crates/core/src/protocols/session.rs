//! The exchange between Verifier and Prover, live or replayed from a stored
//! transcript.

use crate::ff::{FieldElement, Modulus, SampleSet};
use crate::transcript::{ChallengeSource, Entry, Message, Mode, Payload, Reason, Sender};

use super::{reject, Halt, Params, ProtocolError};

struct Replay {
    recorded: Vec<Entry>,
    pos: usize,
}

pub struct Session {
    params: Params,
    source: ChallengeSource,
    entries: Vec<Entry>,
    replay: Option<Replay>,
}

impl Session {
    /// A live session: challenges are drawn, Prover messages come from the
    /// Prover.
    pub fn live(params: Params, protocol_id: &str, public: &[u8]) -> Session {
        let source = ChallengeSource::new(params.mode, protocol_id, public, params.sample, params.modulus);
        Session { params, source, entries: Vec::new(), replay: None }
    }

    /// Replays `recorded`: Prover messages are read back, and challenges are
    /// recomputed (Fiat-Shamir) or read back and range-checked (interactive).
    pub fn replay(params: Params, protocol_id: &str, public: &[u8], recorded: Vec<Entry>) -> Session {
        let mut s = Session::live(params, protocol_id, public);
        s.replay = Some(Replay { recorded, pos: 0 });
        s
    }

    pub fn modulus(&self) -> Modulus {
        self.params.modulus
    }

    pub fn sample_set(&self) -> SampleSet {
        self.params.sample
    }

    pub fn sigma(&self) -> u64 {
        self.params.sample.sigma()
    }

    pub fn into_entries(self) -> Vec<Entry> {
        self.entries
    }

    /// In replay mode, true when every recorded entry has been consumed.
    pub fn replay_exhausted(&self) -> bool {
        self.replay.as_ref().is_none_or(|r| r.pos == r.recorded.len())
    }

    fn record(&mut self, e: Entry) {
        self.source.absorb(&e);
        self.entries.push(e);
    }

    fn next_recorded(&mut self) -> Result<Option<Entry>, Halt> {
        match &mut self.replay {
            None => Ok(None),
            Some(r) => {
                let e = r.recorded.get(r.pos).cloned();
                r.pos += 1;
                match e {
                    Some(e) => Ok(Some(e)),
                    None => reject(Reason::MalformedMessage),
                }
            }
        }
    }

    fn recorded_message(&mut self, sender: Sender, label: &str) -> Result<Option<Payload>, Halt> {
        match self.next_recorded()? {
            None => Ok(None),
            Some(Entry::Message(m)) if m.sender == sender && m.label == label => Ok(Some(m.payload)),
            Some(_) => reject(Reason::MalformedMessage),
        }
    }

    fn marker(&mut self, e: Entry) -> Result<(), Halt> {
        if let Some(r) = self.next_recorded()? {
            if r != e {
                return reject(Reason::MalformedMessage);
            }
        }
        self.record(e);
        Ok(())
    }

    /// A Verifier challenge of `len` elements of `S`.
    pub fn challenge_vector(&mut self, label: &str, len: usize) -> Result<Vec<FieldElement>, Halt> {
        let recorded = self.recorded_message(Sender::Verifier, label)?;
        let values = match (recorded, self.params.mode) {
            (None, _) => self.source.draw(len),
            (Some(Payload::FieldVector(v)), Mode::FiatShamir) => {
                if v != self.source.draw(len) {
                    return reject(Reason::MalformedMessage);
                }
                v
            }
            (Some(Payload::FieldVector(v)), Mode::Interactive { .. }) => {
                let s = self.params.sample;
                if v.len() != len || !v.iter().all(|x| s.contains(*x)) {
                    return reject(Reason::MalformedMessage);
                }
                v
            }
            (Some(_), _) => return reject(Reason::MalformedMessage),
        };
        self.record(Entry::Message(Message {
            sender: Sender::Verifier,
            label: label.into(),
            payload: Payload::FieldVector(values.clone()),
        }));
        Ok(values)
    }

    /// A Verifier challenge in `S`, recorded as a scalar.
    pub fn challenge_scalar(&mut self, label: &str) -> Result<FieldElement, Halt> {
        let recorded = self.recorded_message(Sender::Verifier, label)?;
        let value = match (recorded, self.params.mode) {
            (None, _) => self.source.scalar(),
            (Some(Payload::FieldScalar(x)), Mode::FiatShamir) => {
                if x != self.source.scalar() {
                    return reject(Reason::MalformedMessage);
                }
                x
            }
            (Some(Payload::FieldScalar(x)), Mode::Interactive { .. }) => {
                if !self.params.sample.contains(x) {
                    return reject(Reason::MalformedMessage);
                }
                x
            }
            (Some(_), _) => return reject(Reason::MalformedMessage),
        };
        self.record(Entry::Message(Message {
            sender: Sender::Verifier,
            label: label.into(),
            payload: Payload::FieldScalar(value),
        }));
        Ok(value)
    }

    /// Receives one Prover message per label. `produce` runs only in live
    /// mode.
    pub fn prover<F>(&mut self, labels: &[&str], produce: F) -> Result<Vec<Payload>, Halt>
    where
        F: FnOnce() -> Result<Vec<Payload>, ProtocolError>,
    {
        let payloads = if self.replay.is_some() {
            let mut out = Vec::with_capacity(labels.len());
            for l in labels {
                out.push(self.recorded_message(Sender::Prover, l)?.expect("replay mode"));
            }
            out
        } else {
            let out = produce()?;
            if out.len() != labels.len() {
                return Err(Halt::Abort(ProtocolError::Internal(format!(
                    "prover sent {} messages, expected {}",
                    out.len(),
                    labels.len()
                ))));
            }
            out
        };
        for (l, p) in labels.iter().zip(&payloads) {
            self.record(Entry::Message(Message {
                sender: Sender::Prover,
                label: (*l).into(),
                payload: p.clone(),
            }));
        }
        Ok(payloads)
    }

    /// Single-message form of [`Session::prover`].
    pub fn prover1<F>(&mut self, label: &str, produce: F) -> Result<Payload, Halt>
    where
        F: FnOnce() -> Result<Vec<Payload>, ProtocolError>,
    {
        Ok(self.prover(&[label], produce)?.pop().expect("one message"))
    }

    /// Runs a nested protocol between `Begin(id)` and `End(id)` markers. A
    /// rejection inside becomes `SubprotocolRejected`.
    pub fn sub<T>(&mut self, id: &str, body: impl FnOnce(&mut Session) -> Result<T, Halt>) -> Result<T, Halt> {
        self.marker(Entry::Begin(id.into()))?;
        match body(self) {
            Ok(v) => {
                self.marker(Entry::End(id.into()))?;
                Ok(v)
            }
            Err(Halt::Reject(cause)) => reject(Reason::SubprotocolRejected { id: id.into(), cause: Box::new(cause) }),
            Err(abort) => Err(abort),
        }
    }
}
