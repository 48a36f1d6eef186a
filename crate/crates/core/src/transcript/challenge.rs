//! Verifier challenges: seeded randomness or a SHA-256 hash chain.
//!
//! In Fiat-Shamir mode the hash state absorbs the domain tag, the canonical
//! public inputs and every transcript entry so far. A challenge is read from
//! the stream `SHA-256(state || counter)` for `counter = 0, 1, ...`, split into
//! 8-byte big-endian words; a word `w` is accepted when
//! `w < floor(2^64 / sigma) * sigma` and yields `w mod sigma`.

use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::ff::{FieldElement, Modulus, SampleSet, UniformSource};

use super::encode::{encode_entry_into, put_str};
use super::message::Entry;

pub const DOMAIN_PREFIX: &str = "polycert/v1/";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Interactive { seed: u64 },
    FiatShamir,
}

/// The Fiat-Shamir word stream for one challenge.
struct HashStream<'a> {
    state: &'a Sha256,
    counter: u64,
    block: [u8; 32],
    used: usize,
}

impl<'a> HashStream<'a> {
    fn new(state: &'a Sha256) -> HashStream<'a> {
        HashStream { state, counter: 0, block: [0; 32], used: 32 }
    }

    fn word(&mut self) -> u64 {
        if self.used == 32 {
            let mut h = self.state.clone();
            h.update(self.counter.to_le_bytes());
            self.block = h.finalize().into();
            self.counter += 1;
            self.used = 0;
        }
        let w = u64::from_be_bytes(self.block[self.used..self.used + 8].try_into().expect("8 bytes"));
        self.used += 8;
        w
    }
}

impl UniformSource for HashStream<'_> {
    fn next_below(&mut self, bound: u64) -> u64 {
        let b = bound as u128;
        let limit = (1u128 << 64) / b * b;
        loop {
            let w = self.word();
            if (w as u128) < limit {
                return w % bound;
            }
        }
    }
}

enum Kind {
    Interactive(Box<ChaCha20Rng>),
    FiatShamir(Sha256),
}

/// Produces uniform elements of `S`.
pub struct ChallengeSource {
    kind: Kind,
    sample: SampleSet,
    p: Modulus,
}

impl ChallengeSource {
    pub fn interactive(seed: u64, sample: SampleSet, p: Modulus) -> ChallengeSource {
        ChallengeSource { kind: Kind::Interactive(Box::new(ChaCha20Rng::seed_from_u64(seed))), sample, p }
    }

    /// Starts the hash chain from the domain tag and the canonical public
    /// inputs.
    pub fn fiat_shamir(protocol_id: &str, public: &[u8], sample: SampleSet, p: Modulus) -> ChallengeSource {
        let mut head = Vec::new();
        put_str(&mut head, &format!("{DOMAIN_PREFIX}{protocol_id}"));
        let mut h = Sha256::new();
        h.update(&head);
        h.update(public);
        ChallengeSource { kind: Kind::FiatShamir(h), sample, p }
    }

    pub fn new(mode: Mode, protocol_id: &str, public: &[u8], sample: SampleSet, p: Modulus) -> ChallengeSource {
        match mode {
            Mode::Interactive { seed } => ChallengeSource::interactive(seed, sample, p),
            Mode::FiatShamir => ChallengeSource::fiat_shamir(protocol_id, public, sample, p),
        }
    }

    pub fn sample_set(&self) -> SampleSet {
        self.sample
    }

    /// Feeds a transcript entry into the hash chain (no-op in interactive mode).
    pub fn absorb(&mut self, entry: &Entry) {
        if let Kind::FiatShamir(h) = &mut self.kind {
            let mut buf = Vec::new();
            encode_entry_into(&mut buf, entry);
            h.update(&buf);
        }
    }

    /// One challenge of `len` elements of `S`.
    pub fn draw(&mut self, len: usize) -> Vec<FieldElement> {
        match &mut self.kind {
            Kind::Interactive(rng) => self.sample.sample_vec(rng.as_mut(), self.p, len),
            Kind::FiatShamir(h) => {
                let mut stream = HashStream::new(h);
                self.sample.sample_vec(&mut stream, self.p, len)
            }
        }
    }

    pub fn scalar(&mut self) -> FieldElement {
        self.draw(1)[0]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::transcript::message::{Message, Payload, Sender};

    fn p() -> Modulus {
        Modulus::new(2147483647).unwrap()
    }

    fn entry(v: u64) -> Entry {
        Entry::Message(Message {
            sender: Sender::Prover,
            label: "v".into(),
            payload: Payload::FieldVector(vec![p().elem(v), p().elem(3)]),
        })
    }

    #[test]
    fn sigma_one_is_always_zero() {
        let s = SampleSet::new(1, p()).unwrap();
        let mut src = ChallengeSource::fiat_shamir("t", b"", s, p());
        assert!(src.draw(50).iter().all(|x| x.is_zero()));
    }

    #[test]
    fn identical_inputs_give_identical_challenges() {
        let s = SampleSet::new(64, p()).unwrap();
        let mut a = ChallengeSource::fiat_shamir("matmul", b"abc", s, p());
        let mut b = ChallengeSource::fiat_shamir("matmul", b"abc", s, p());
        a.absorb(&entry(5));
        b.absorb(&entry(5));
        assert_eq!(a.draw(10), b.draw(10));
        let mut c = ChallengeSource::interactive(9, s, p());
        let mut d = ChallengeSource::interactive(9, s, p());
        assert_eq!(c.draw(100), d.draw(100));
    }

    #[test]
    fn domain_tag_separates_protocols() {
        let s = SampleSet::full(p());
        let mut a = ChallengeSource::fiat_shamir("rank_lb", b"", s, p());
        let mut b = ChallengeSource::fiat_shamir("rank_ub", b"", s, p());
        assert_ne!(a.draw(4), b.draw(4));
    }

    #[test]
    fn first_word_matches_direct_hash() {
        // Independent recomputation of the stream definition.
        let s = SampleSet::full(p());
        let mut src = ChallengeSource::fiat_shamir("x", b"pub", s, p());
        let mut h = Sha256::new();
        let tag = "polycert/v1/x";
        h.update((tag.len() as u64).to_le_bytes());
        h.update(tag.as_bytes());
        h.update(b"pub");
        h.update(0u64.to_le_bytes());
        let d = h.finalize();
        let w = u64::from_be_bytes(d[..8].try_into().unwrap());
        let sigma = p().value();
        let limit = (1u128 << 64) / sigma as u128 * sigma as u128;
        if (w as u128) < limit {
            assert_eq!(src.scalar().value(), w % sigma);
        }
    }

    #[test]
    fn avalanche_on_prior_message() {
        // Changing one prior prover value must change the next challenge.
        let s = SampleSet::full(p());
        let mut collisions = 0;
        for k in 0..1000u64 {
            let mut a = ChallengeSource::fiat_shamir("singularity", b"", s, p());
            let mut b = ChallengeSource::fiat_shamir("singularity", b"", s, p());
            a.absorb(&entry(k));
            b.absorb(&entry(k ^ 1));
            if a.draw(2) == b.draw(2) {
                collisions += 1;
            }
        }
        assert_eq!(collisions, 0);
    }

    fn chi_square(counts: &[u64], total: u64) -> f64 {
        let e = total as f64 / counts.len() as f64;
        counts.iter().map(|&c| (c as f64 - e).powi(2) / e).sum()
    }

    #[test]
    fn fiat_shamir_challenges_are_uniform() {
        // Critical values of chi-square at significance 0.001 for
        // sigma - 1 degrees of freedom.
        for &(sigma, crit) in &[(2u64, 10.828), (16, 37.697), (64, 103.442)] {
            let s = SampleSet::new(sigma, p()).unwrap();
            let mut counts = vec![0u64; sigma as usize];
            let mut src = ChallengeSource::fiat_shamir("chi", b"", s, p());
            let total = 20_000;
            for k in 0..total / 100 {
                src.absorb(&entry(k));
                for x in src.draw(100) {
                    counts[x.value() as usize] += 1;
                }
            }
            let stat = chi_square(&counts, total);
            assert!(stat < crit, "sigma {sigma}: chi-square {stat}");
        }
    }
}
