//! Prime-field arithmetic and uniform sampling from a prefix subset of the field.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Default modulus, the Mersenne prime 2^31 - 1.
pub const DEFAULT_MODULUS: u64 = 2_147_483_647;

const MAX_MODULUS: u64 = 1 << 62;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u64, u64),
    #[error("{0} is not a prime below 2^62")]
    InvalidModulus(u64),
    #[error("sample set size {sigma} must lie in [1, {p}]")]
    InvalidSampleSet { sigma: u64, p: u64 },
}

/// A validated prime modulus `p` with `2 <= p < 2^62`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct Modulus(u64);

impl Modulus {
    pub fn new(p: u64) -> Result<Self, FieldError> {
        if !(2..MAX_MODULUS).contains(&p) || !is_prime(p) {
            return Err(FieldError::InvalidModulus(p));
        }
        Ok(Modulus(p))
    }

    pub fn value(self) -> u64 {
        self.0
    }

    pub fn zero(self) -> FieldElement {
        FieldElement { value: 0, modulus: self }
    }

    pub fn one(self) -> FieldElement {
        FieldElement { value: 1, modulus: self }
    }

    /// Embeds an integer, reducing it modulo `p`.
    pub fn elem(self, v: u64) -> FieldElement {
        FieldElement { value: v % self.0, modulus: self }
    }

    /// Embeds a signed integer, so that `elem_i64(-1)` is `p - 1`.
    pub fn elem_i64(self, v: i64) -> FieldElement {
        let r = v.rem_euclid(self.0 as i64) as u64;
        FieldElement { value: r, modulus: self }
    }
}

impl Default for Modulus {
    fn default() -> Self {
        Modulus(DEFAULT_MODULUS)
    }
}

impl TryFrom<u64> for Modulus {
    type Error = FieldError;
    fn try_from(p: u64) -> Result<Self, FieldError> {
        Modulus::new(p)
    }
}

impl From<Modulus> for u64 {
    fn from(m: Modulus) -> u64 {
        m.0
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin; the witness set is exact for all 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &w in &WITNESSES {
        if n.is_multiple_of(w) {
            return n == w;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'outer: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// An element of `Z/pZ`, always stored reduced.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement {
    value: u64,
    modulus: Modulus,
}

impl FieldElement {
    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> Modulus {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn is_one(self) -> bool {
        self.value == 1
    }

    fn check(self, other: FieldElement) -> Result<(), FieldError> {
        if self.modulus != other.modulus {
            return Err(FieldError::ModulusMismatch(self.modulus.0, other.modulus.0));
        }
        Ok(())
    }

    pub fn checked_add(self, other: FieldElement) -> Result<FieldElement, FieldError> {
        self.check(other)?;
        Ok(self + other)
    }

    pub fn checked_sub(self, other: FieldElement) -> Result<FieldElement, FieldError> {
        self.check(other)?;
        Ok(self - other)
    }

    pub fn checked_mul(self, other: FieldElement) -> Result<FieldElement, FieldError> {
        self.check(other)?;
        Ok(self * other)
    }

    pub fn checked_div(self, other: FieldElement) -> Result<FieldElement, FieldError> {
        self.check(other)?;
        Ok(self * other.inv()?)
    }

    pub fn inv(self) -> Result<FieldElement, FieldError> {
        if self.value == 0 {
            return Err(FieldError::DivisionByZero);
        }
        // Extended Euclid on (value, p); cheaper than Fermat for small p.
        let p = self.modulus.0 as i128;
        let (mut r0, mut r1) = (p, self.value as i128);
        let (mut t0, mut t1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1);
        Ok(FieldElement {
            value: t0.rem_euclid(p) as u64,
            modulus: self.modulus,
        })
    }

    pub fn pow(self, exp: u64) -> FieldElement {
        FieldElement {
            value: pow_mod(self.value, exp, self.modulus.0),
            modulus: self.modulus,
        }
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

// The operator impls panic on mismatched moduli; use the `checked_*` family
// where operands come from untrusted sources.
impl Add for FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: FieldElement) -> FieldElement {
        assert_eq!(self.modulus, rhs.modulus, "modulus mismatch");
        let p = self.modulus.0;
        let s = self.value + rhs.value;
        FieldElement {
            value: if s >= p { s - p } else { s },
            modulus: self.modulus,
        }
    }
}

impl Sub for FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: FieldElement) -> FieldElement {
        assert_eq!(self.modulus, rhs.modulus, "modulus mismatch");
        let p = self.modulus.0;
        let value = if self.value >= rhs.value {
            self.value - rhs.value
        } else {
            self.value + p - rhs.value
        };
        FieldElement { value, modulus: self.modulus }
    }
}

impl Mul for FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: FieldElement) -> FieldElement {
        assert_eq!(self.modulus, rhs.modulus, "modulus mismatch");
        FieldElement {
            value: mul_mod(self.value, rhs.value, self.modulus.0),
            modulus: self.modulus,
        }
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        if self.value == 0 {
            self
        } else {
            FieldElement {
                value: self.modulus.0 - self.value,
                modulus: self.modulus,
            }
        }
    }
}

impl AddAssign for FieldElement {
    fn add_assign(&mut self, rhs: FieldElement) {
        *self = *self + rhs;
    }
}

impl SubAssign for FieldElement {
    fn sub_assign(&mut self, rhs: FieldElement) {
        *self = *self - rhs;
    }
}

impl MulAssign for FieldElement {
    fn mul_assign(&mut self, rhs: FieldElement) {
        *self = *self * rhs;
    }
}

/// A source of uniform integers; implemented by seeded generators and by the
/// Fiat-Shamir hash stream.
pub trait UniformSource {
    /// Returns a uniform integer in `[0, bound)`. `bound` is at least 1.
    fn next_below(&mut self, bound: u64) -> u64;
}

impl<R: rand::RngCore> UniformSource for R {
    fn next_below(&mut self, bound: u64) -> u64 {
        use rand::Rng;
        self.gen_range(0..bound)
    }
}

/// The sample set `S = {0, 1, ..., sigma - 1}` embedded in the field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampleSet {
    sigma: u64,
}

impl SampleSet {
    pub fn new(sigma: u64, modulus: Modulus) -> Result<Self, FieldError> {
        if sigma == 0 || sigma > modulus.value() {
            return Err(FieldError::InvalidSampleSet {
                sigma,
                p: modulus.value(),
            });
        }
        Ok(SampleSet { sigma })
    }

    /// The whole field as a sample set.
    pub fn full(modulus: Modulus) -> Self {
        SampleSet {
            sigma: modulus.value(),
        }
    }

    pub fn sigma(self) -> u64 {
        self.sigma
    }

    pub fn sample<S: UniformSource + ?Sized>(self, src: &mut S, modulus: Modulus) -> FieldElement {
        modulus.elem(src.next_below(self.sigma))
    }

    pub fn sample_vec<S: UniformSource + ?Sized>(
        self,
        src: &mut S,
        modulus: Modulus,
        len: usize,
    ) -> Vec<FieldElement> {
        (0..len).map(|_| self.sample(src, modulus)).collect()
    }

    pub fn contains(self, x: FieldElement) -> bool {
        x.value() < self.sigma
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha20Rng;

    fn f7() -> Modulus {
        Modulus::new(7).unwrap()
    }

    #[test]
    fn small_field_examples() {
        let m = f7();
        assert_eq!((m.elem(3) * m.elem(5)).value(), 1);
        assert_eq!(m.elem(1).inv().unwrap().value(), 1);
        assert_eq!((m.elem(4) + m.elem(3)).value(), 0);
        assert_eq!(m.elem_i64(-1).value(), 6);
    }

    #[test]
    fn error_paths() {
        let m = f7();
        assert_eq!(m.zero().inv(), Err(FieldError::DivisionByZero));
        assert_eq!(m.elem(3).checked_div(m.zero()), Err(FieldError::DivisionByZero));
        let q = Modulus::new(11).unwrap();
        assert_eq!(
            m.elem(3).checked_add(q.elem(3)),
            Err(FieldError::ModulusMismatch(7, 11))
        );
        assert!(Modulus::new(9).is_err());
        assert!(Modulus::new(2).is_ok());
        assert!(Modulus::new(1).is_err());
        assert!(Modulus::new(DEFAULT_MODULUS).is_ok());
        assert!(SampleSet::new(0, m).is_err());
        assert!(SampleSet::new(8, m).is_err());
    }

    #[test]
    fn primality_matches_trial_division() {
        for n in 0u64..2000 {
            let naive = n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0);
            assert_eq!(is_prime(n), naive, "n = {n}");
        }
        assert!(is_prime((1 << 61) - 1));
        assert!(!is_prime(3_215_031_751)); // strong pseudoprime to bases 2,3,5,7
    }

    #[test]
    fn singleton_sample_set_is_zero() {
        let m = Modulus::default();
        let s = SampleSet::new(1, m).unwrap();
        let mut rng = ChaCha20Rng::seed_from_u64(9);
        assert!((0..100).all(|_| s.sample(&mut rng, m).is_zero()));
    }

    #[test]
    fn seeded_sampling_is_reproducible() {
        let m = Modulus::default();
        let s = SampleSet::new(64, m).unwrap();
        let a = s.sample_vec(&mut ChaCha20Rng::seed_from_u64(42), m, 50);
        let b = s.sample_vec(&mut ChaCha20Rng::seed_from_u64(42), m, 50);
        assert_eq!(a, b);
        assert!(a.iter().all(|x| x.value() < 64));
    }

    #[test]
    fn chi_square_uniformity() {
        // 15 degrees of freedom; the 0.999 quantile is 37.697.
        let m = Modulus::default();
        let s = SampleSet::new(16, m).unwrap();
        let mut rng = ChaCha20Rng::seed_from_u64(2024);
        let mut counts = [0u64; 16];
        let draws = 100_000;
        for _ in 0..draws {
            counts[s.sample(&mut rng, m).value() as usize] += 1;
        }
        let expected = draws as f64 / 16.0;
        let chi2: f64 = counts
            .iter()
            .map(|&c| (c as f64 - expected).powi(2) / expected)
            .sum();
        assert!(chi2 < 37.697, "chi2 = {chi2}");
    }

    proptest! {
        #[test]
        fn inverse_is_inverse(v in 1u64..DEFAULT_MODULUS) {
            let m = Modulus::default();
            let a = m.elem(v);
            prop_assert!((a * a.inv().unwrap()).is_one());
        }

        #[test]
        fn field_axioms(a in 0u64..1_000_003, b in 0u64..1_000_003, c in 0u64..1_000_003) {
            let m = Modulus::new(1_000_003).unwrap();
            let (a, b, c) = (m.elem(a), m.elem(b), m.elem(c));
            prop_assert_eq!(a * (b + c), a * b + a * c);
            prop_assert_eq!((a - b) + b, a);
            prop_assert_eq!(a + (-a), m.zero());
        }
    }
}
