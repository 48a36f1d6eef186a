//! Run parameters and the repetition count of row-space membership.

use crate::ff::{Modulus, SampleSet};
use crate::transcript::Mode;

use super::ProtocolError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Params {
    pub modulus: Modulus,
    pub sample: SampleSet,
    pub mode: Mode,
    /// Refuse runs whose `#S` is below the protocol's lower bound.
    pub strict: bool,
}

impl Params {
    pub fn new(modulus: Modulus, sigma: u64, mode: Mode, strict: bool) -> Result<Params, ProtocolError> {
        let sample = SampleSet::new(sigma, modulus).map_err(|e| ProtocolError::ParamsInvalid(e.to_string()))?;
        Ok(Params { modulus, sample, mode, strict })
    }

    pub fn sigma(&self) -> u64 {
        self.sample.sigma()
    }
}

/// `t = 1 + ceil(log_{sigma/rho}(2 rho d))`, clamped to at least 2, computed
/// with integers only. `None` when `sigma <= rho` (the logarithm base does
/// not exceed one) or the computation overflows.
pub fn rsm_repetitions(sigma: u64, rho: u64, d: u64) -> Option<usize> {
    if rho == 0 || sigma <= rho {
        return None;
    }
    let target = 2u128 * rho as u128 * d.max(1) as u128;
    // Smallest k with (sigma / rho)^k >= target, i.e. sigma^k >= target * rho^k.
    let (mut num, mut den) = (1u128, 1u128);
    let mut k = 0usize;
    while num < target.checked_mul(den)? {
        num = num.checked_mul(sigma as u128)?;
        den = den.checked_mul(rho as u128)?;
        k += 1;
    }
    Some((1 + k).max(2))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn reference(sigma: u64, rho: u64, d: u64) -> usize {
        let x = ((2 * rho * d) as f64).ln() / (sigma as f64 / rho as f64).ln();
        (1 + x.ceil().max(0.0) as usize).max(2)
    }

    #[test]
    fn repetitions_match_float_formula_off_boundaries() {
        for &(s, r, d) in &[(64, 2, 2), (1 << 31, 8, 4), (100, 3, 5), (33, 4, 4), (1000, 16, 8)] {
            assert_eq!(rsm_repetitions(s, r, d), Some(reference(s, r, d)), "{s} {r} {d}");
        }
    }

    #[test]
    fn exact_powers_do_not_round_up() {
        // sigma / rho = 4, 2 rho d = 16 = 4^2: t = 1 + 2.
        assert_eq!(rsm_repetitions(8, 2, 4), Some(3));
        assert_eq!(rsm_repetitions(4, 4, 1), None);
        assert_eq!(rsm_repetitions(3, 4, 1), None);
        assert_eq!(rsm_repetitions(2, 0, 1), None);
    }
}
