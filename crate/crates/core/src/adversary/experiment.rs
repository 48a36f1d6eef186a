//! Repeated cheating runs and their acceptance rate.

use serde::{Deserialize, Serialize};

use crate::ff::Modulus;
use crate::protocols::{run, Params, ProtocolError, Statement};
use crate::transcript::{Bound, Mode};

use super::{tactic, CheatError, Cheater};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SoundnessReport {
    pub protocol_id: String,
    pub instance: String,
    pub tactic: String,
    pub trials: u64,
    pub accepts: u64,
    pub rate: f64,
    pub bound: Bound,
    /// `bound + 3` binomial standard errors.
    pub threshold: f64,
    pub pass: bool,
}

impl SoundnessReport {
    pub fn new(protocol_id: &str, instance: &str, trials: u64, accepts: u64, bound: Bound) -> SoundnessReport {
        let rate = accepts as f64 / trials as f64;
        let b = bound.value().min(1.0);
        let threshold = b + 3.0 * (b * (1.0 - b) / trials as f64).sqrt();
        SoundnessReport {
            protocol_id: protocol_id.into(),
            instance: instance.into(),
            tactic: tactic(protocol_id).into(),
            trials,
            accepts,
            rate,
            bound,
            threshold,
            pass: rate <= threshold,
        }
    }
}

/// Runs the cheater against the false statement `st` for `trials`
/// interactive sessions with fresh Verifier randomness each time, in
/// permissive mode so that small `sigma` is allowed.
pub fn run_soundness_experiment(
    st: &Statement,
    instance: &str,
    p: Modulus,
    sigma: u64,
    trials: u64,
    seed: u64,
) -> Result<SoundnessReport, CheatError> {
    let base = Params::new(p, sigma, Mode::FiatShamir, false)?;
    Cheater::against(st, p, base.sample, seed)?;
    let mut accepts = 0;
    for k in 0..trials {
        let trial_seed = seed.wrapping_mul(0x9e37_79b9_7f4a_7c15).wrapping_add(k);
        let params = Params { mode: Mode::Interactive { seed: trial_seed }, ..base };
        let mut cheater = Cheater::new(p, base.sample, trial_seed ^ 0x5555);
        match run(st, params, &mut cheater) {
            Ok(out) if out.verdict.accepted => accepts += 1,
            Ok(_) | Err(ProtocolError::ProverGaveUp(_)) => {}
            Err(e) => return Err(e.into()),
        }
    }
    Ok(SoundnessReport::new(st.id(), instance, trials, accepts, st.soundness_bound(sigma)))
}
