//! Reduced rational functions and vectors of them with a cached common denominator.

use std::fmt;

use crate::ff::{FieldElement, Modulus};

use super::{Poly, PolyError};

/// `num / den` with `den` monic and `gcd(num, den) = 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<RatFunc, PolyError> {
        if den.is_zero() {
            return Err(PolyError::ZeroDenominator);
        }
        if num.is_zero() {
            let p = num.modulus();
            return Ok(RatFunc { num, den: Poly::one(p) });
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g)?, den.div_exact(&g)?)
        };
        let k = den.lc();
        if !k.is_one() {
            let ki = k.inv().expect("nonzero");
            num = num.scale(ki);
            den = den.scale(ki);
        }
        Ok(RatFunc { num, den })
    }

    pub fn from_poly(p: Poly) -> RatFunc {
        let m = p.modulus();
        RatFunc { num: p, den: Poly::one(m) }
    }

    pub fn zero(p: Modulus) -> RatFunc {
        RatFunc::from_poly(Poly::zero(p))
    }

    pub fn one(p: Modulus) -> RatFunc {
        RatFunc::from_poly(Poly::one(p))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    /// The denominator: minimal monic `g` with `g * self` polynomial.
    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn modulus(&self) -> Modulus {
        self.num.modulus()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_poly(&self) -> bool {
        self.den.is_one()
    }

    pub fn add(&self, o: &RatFunc) -> RatFunc {
        if self.den == o.den {
            return RatFunc::new(&self.num + &o.num, self.den.clone()).expect("nonzero den");
        }
        let num = &(&self.num * &o.den) + &(&o.num * &self.den);
        RatFunc::new(num, &self.den * &o.den).expect("nonzero den")
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }

    pub fn sub(&self, o: &RatFunc) -> RatFunc {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &RatFunc) -> RatFunc {
        // Cross-cancel first so intermediate degrees stay small.
        let g1 = self.num.gcd(&o.den);
        let g2 = o.num.gcd(&self.den);
        let a = self.num.div_exact(&g1).unwrap_or_else(|_| self.num.clone());
        let d = o.den.div_exact(&g1).unwrap_or_else(|_| o.den.clone());
        let c = o.num.div_exact(&g2).unwrap_or_else(|_| o.num.clone());
        let b = self.den.div_exact(&g2).unwrap_or_else(|_| self.den.clone());
        RatFunc::new(&a * &c, &b * &d).expect("nonzero den")
    }

    pub fn mul_poly(&self, f: &Poly) -> RatFunc {
        self.mul(&RatFunc::from_poly(f.clone()))
    }

    pub fn inv(&self) -> Result<RatFunc, PolyError> {
        if self.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, o: &RatFunc) -> Result<RatFunc, PolyError> {
        Ok(self.mul(&o.inv()?))
    }

    /// Evaluates at `a`; `None` when `a` is a root of the denominator.
    pub fn eval(&self, a: FieldElement) -> Option<FieldElement> {
        let d = self.den.eval(a);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(a) * d.inv().expect("nonzero"))
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_poly() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

/// A vector of reduced rational functions with `common_den` the monic lcm of
/// the entry denominators.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatVec {
    entries: Vec<RatFunc>,
    common_den: Poly,
}

impl RatVec {
    /// Reduces each `(num, den)` pair and computes the common denominator.
    pub fn normalize(p: Modulus, raw: Vec<(Poly, Poly)>) -> Result<RatVec, PolyError> {
        let entries = raw
            .into_iter()
            .map(|(n, d)| RatFunc::new(n, d))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(RatVec::from_entries(p, entries))
    }

    pub fn from_entries(p: Modulus, entries: Vec<RatFunc>) -> RatVec {
        let mut l = Poly::one(p);
        for e in &entries {
            if !e.den().is_one() {
                let g = l.gcd(e.den());
                l = &l * &e.den().div_exact(&g).expect("gcd divides");
            }
        }
        RatVec { entries, common_den: l }
    }

    pub fn entries(&self) -> &[RatFunc] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn common_den(&self) -> &Poly {
        &self.common_den
    }

    /// `common_den * self` as a polynomial vector.
    pub fn numerators(&self) -> Vec<Poly> {
        self.entries
            .iter()
            .map(|e| {
                let k = self.common_den.div_exact(e.den()).expect("lcm multiple");
                &k * e.num()
            })
            .collect()
    }

    pub fn is_poly(&self) -> bool {
        self.common_den.is_one()
    }

    /// Evaluates every entry; `None` if `a` is a root of the common denominator.
    pub fn eval(&self, a: FieldElement) -> Option<Vec<FieldElement>> {
        self.entries.iter().map(|e| e.eval(a)).collect()
    }
}
