//! Dense univariate polynomials over a prime field.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::ff::{FieldElement, Modulus};

use super::PolyError;

/// Degree of the zero polynomial.
pub const NEG_INF: i64 = i64::MIN;

const KARATSUBA_CUTOFF: usize = 33;

/// A polynomial with coefficients stored low-to-high, always normalized so
/// that the last stored coefficient is nonzero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    p: Modulus,
    c: Vec<u64>,
}

fn mulm(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn addm(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

fn subm(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn school(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    // Accumulate in u128 and reduce lazily; each product is < 2^124 so a
    // handful of additions fit before overflow.
    let mut acc = vec![0u128; a.len() + b.len() - 1];
    let p128 = p as u128;
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            let t = acc[i + j] + x as u128 * y as u128;
            acc[i + j] = if t >= p128 << 64 { t % p128 } else { t };
        }
    }
    acc.into_iter().map(|t| (t % p128) as u64).collect()
}

fn add_into(dst: &mut [u64], src: &[u64], p: u64) {
    for (d, &s) in dst.iter_mut().zip(src) {
        *d = addm(*d, s, p);
    }
}

fn sub_into(dst: &mut [u64], src: &[u64], p: u64) {
    for (d, &s) in dst.iter_mut().zip(src) {
        *d = subm(*d, s, p);
    }
}

fn karatsuba(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.len() < KARATSUBA_CUTOFF || b.len() < KARATSUBA_CUTOFF {
        return school(a, b, p);
    }
    let h = a.len().max(b.len()) / 2;
    let (a0, a1) = a.split_at(h.min(a.len()));
    let (b0, b1) = b.split_at(h.min(b.len()));
    let z0 = karatsuba(a0, b0, p);
    let z2 = karatsuba(a1, b1, p);
    let mut sa = a0.to_vec();
    sa.resize(a0.len().max(a1.len()), 0);
    add_into(&mut sa, a1, p);
    let mut sb = b0.to_vec();
    sb.resize(b0.len().max(b1.len()), 0);
    add_into(&mut sb, b1, p);
    let mut z1 = karatsuba(&sa, &sb, p);
    sub_into(&mut z1, &z0, p);
    sub_into(&mut z1, &z2, p);
    let mut out = vec![0u64; a.len() + b.len() - 1];
    add_into(&mut out, &z0, p);
    add_into(&mut out[h..], &z1, p);
    add_into(&mut out[2 * h..], &z2, p);
    out
}

impl Poly {
    /// Builds a polynomial from reduced-or-not integer coefficients.
    pub fn from_u64s(p: Modulus, coeffs: &[u64]) -> Poly {
        let mut c: Vec<u64> = coeffs.iter().map(|&v| v % p.value()).collect();
        trim(&mut c);
        Poly { p, c }
    }

    /// Builds a polynomial from signed coefficients, low-to-high.
    pub fn from_i64s(p: Modulus, coeffs: &[i64]) -> Poly {
        let mut c: Vec<u64> = coeffs.iter().map(|&v| p.elem_i64(v).value()).collect();
        trim(&mut c);
        Poly { p, c }
    }

    pub fn from_coeffs(p: Modulus, coeffs: &[FieldElement]) -> Poly {
        let mut c: Vec<u64> = coeffs.iter().map(|e| e.value()).collect();
        trim(&mut c);
        Poly { p, c }
    }

    pub(crate) fn from_raw(p: Modulus, mut c: Vec<u64>) -> Poly {
        trim(&mut c);
        Poly { p, c }
    }

    pub fn zero(p: Modulus) -> Poly {
        Poly { p, c: Vec::new() }
    }

    pub fn one(p: Modulus) -> Poly {
        Poly { p, c: vec![1] }
    }

    /// The indeterminate `x`.
    pub fn x(p: Modulus) -> Poly {
        Poly { p, c: vec![0, 1] }
    }

    pub fn constant(c: FieldElement) -> Poly {
        Poly::from_raw(c.modulus(), vec![c.value()])
    }

    /// `c * x^k`.
    pub fn monomial(c: FieldElement, k: usize) -> Poly {
        if c.is_zero() {
            return Poly::zero(c.modulus());
        }
        let mut v = vec![0; k + 1];
        v[k] = c.value();
        Poly { p: c.modulus(), c: v }
    }

    pub fn modulus(&self) -> Modulus {
        self.p
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.c == [1]
    }

    pub fn is_constant(&self) -> bool {
        self.c.len() <= 1
    }

    /// Degree, with [`NEG_INF`] for the zero polynomial.
    pub fn deg(&self) -> i64 {
        if self.c.is_empty() {
            NEG_INF
        } else {
            self.c.len() as i64 - 1
        }
    }

    /// Number of stored coefficients (`deg + 1`, or 0 for zero).
    pub fn len(&self) -> usize {
        self.c.len()
    }

    pub fn is_empty(&self) -> bool {
        self.c.is_empty()
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        self.p.elem(self.c.get(i).copied().unwrap_or(0))
    }

    pub fn coeffs(&self) -> Vec<FieldElement> {
        self.c.iter().map(|&v| self.p.elem(v)).collect()
    }

    pub fn raw(&self) -> &[u64] {
        &self.c
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn lc(&self) -> FieldElement {
        self.p.elem(self.c.last().copied().unwrap_or(0))
    }

    fn same(&self, other: &Poly) -> Result<(), PolyError> {
        if self.p != other.p {
            return Err(PolyError::ModulusMismatch(self.p.value(), other.p.value()));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Poly) -> Result<Poly, PolyError> {
        self.same(other)?;
        Ok(self + other)
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly, PolyError> {
        self.same(other)?;
        Ok(self * other)
    }

    pub fn scale(&self, k: FieldElement) -> Poly {
        if k.is_zero() {
            return Poly::zero(self.p);
        }
        let p = self.p.value();
        let kv = k.value();
        Poly {
            p: self.p,
            c: self.c.iter().map(|&v| mulm(v, kv, p)).collect(),
        }
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = vec![0; k];
        c.extend_from_slice(&self.c);
        Poly { p: self.p, c }
    }

    /// Schoolbook product; kept separate so tests can compare against it.
    pub fn mul_schoolbook(&self, other: &Poly) -> Poly {
        Poly::from_raw(self.p, school(&self.c, &other.c, self.p.value()))
    }

    pub fn divrem(&self, g: &Poly) -> Result<(Poly, Poly), PolyError> {
        self.same(g)?;
        if g.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        if self.c.len() < g.c.len() {
            return Ok((Poly::zero(self.p), self.clone()));
        }
        let p = self.p.value();
        let inv = g.lc().inv().expect("nonzero leading coefficient").value();
        let mut r = self.c.clone();
        let dg = g.c.len() - 1;
        let mut q = vec![0u64; r.len() - dg];
        for i in (0..q.len()).rev() {
            let coef = mulm(r[i + dg], inv, p);
            q[i] = coef;
            if coef == 0 {
                continue;
            }
            for (j, &gj) in g.c.iter().enumerate() {
                r[i + j] = subm(r[i + j], mulm(coef, gj, p), p);
            }
        }
        r.truncate(dg);
        Ok((Poly::from_raw(self.p, q), Poly::from_raw(self.p, r)))
    }

    /// Exact quotient; errors if the division leaves a remainder.
    pub fn div_exact(&self, g: &Poly) -> Result<Poly, PolyError> {
        let (q, r) = self.divrem(g)?;
        if !r.is_zero() {
            return Err(PolyError::InexactDivision);
        }
        Ok(q)
    }

    pub fn rem(&self, g: &Poly) -> Result<Poly, PolyError> {
        Ok(self.divrem(g)?.1)
    }

    /// Horner evaluation.
    pub fn eval(&self, a: FieldElement) -> FieldElement {
        assert_eq!(a.modulus(), self.p, "modulus mismatch");
        let p = self.p.value();
        let av = a.value();
        let mut acc = 0u64;
        for &c in self.c.iter().rev() {
            acc = addm(mulm(acc, av, p), c, p);
        }
        self.p.elem(acc)
    }

    /// Scales to leading coefficient 1; the zero polynomial is returned as is.
    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(self.lc().inv().expect("nonzero"))
    }

    pub fn is_monic(&self) -> bool {
        self.c.last() == Some(&1)
    }

    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended Euclid: returns `(g, s, t)` with `g` monic, `g = s f + t h`
    /// and the minimal-degree Bezout pair.
    pub fn xgcd(&self, h: &Poly) -> Result<(Poly, Poly, Poly), PolyError> {
        self.same(h)?;
        if self.is_zero() && h.is_zero() {
            return Err(PolyError::BothZero);
        }
        let m = self.p;
        let (mut r0, mut r1) = (self.clone(), h.clone());
        let (mut s0, mut s1) = (Poly::one(m), Poly::zero(m));
        let (mut t0, mut t1) = (Poly::zero(m), Poly::one(m));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1)?;
            let s = &s0 - &(&q * &s1);
            let t = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        let k = r0.lc().inv().expect("nonzero gcd");
        Ok((r0.scale(k), s0.scale(k), t0.scale(k)))
    }

    /// Lagrange interpolation through pairwise-distinct abscissae.
    pub fn interpolate(p: Modulus, points: &[(FieldElement, FieldElement)]) -> Result<Poly, PolyError> {
        for (i, a) in points.iter().enumerate() {
            if points[..i].iter().any(|b| b.0 == a.0) {
                return Err(PolyError::DuplicateAbscissa);
            }
        }
        // Newton form, then expand.
        let n = points.len();
        let mut coef: Vec<FieldElement> = points.iter().map(|pt| pt.1).collect();
        for j in 1..n {
            for i in (j..n).rev() {
                let num = coef[i] - coef[i - 1];
                let den = points[i].0 - points[i - j].0;
                coef[i] = num * den.inv().expect("distinct abscissae");
            }
        }
        let mut acc = Poly::zero(p);
        for i in (0..n).rev() {
            let lin = Poly::from_coeffs(p, &[-points[i].0, p.one()]);
            acc = &(&acc * &lin) + &Poly::constant(coef[i]);
        }
        Ok(acc)
    }

    /// Product of `(x - r)` over the given roots.
    pub fn from_roots(p: Modulus, roots: &[FieldElement]) -> Poly {
        roots.iter().fold(Poly::one(p), |acc, &r| {
            &acc * &Poly::from_coeffs(p, &[-r, p.one()])
        })
    }

    pub fn pow(&self, mut e: u64) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one(self.p);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.c.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.c.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, c) {
                (0, _) => write!(f, "{c}")?,
                (1, 1) => write!(f, "x")?,
                (1, _) => write!(f, "{c}*x")?,
                (_, 1) => write!(f, "x^{i}")?,
                _ => write!(f, "{c}*x^{i}")?,
            }
        }
        Ok(())
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        assert_eq!(self.p, rhs.p, "modulus mismatch");
        let p = self.p.value();
        let (long, short) = if self.c.len() >= rhs.c.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut c = long.c.clone();
        add_into(&mut c, &short.c, p);
        Poly::from_raw(self.p, c)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        assert_eq!(self.p, rhs.p, "modulus mismatch");
        let p = self.p.value();
        let mut c = self.c.clone();
        if c.len() < rhs.c.len() {
            c.resize(rhs.c.len(), 0);
        }
        sub_into(&mut c, &rhs.c, p);
        Poly::from_raw(self.p, c)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        assert_eq!(self.p, rhs.p, "modulus mismatch");
        Poly::from_raw(self.p, karatsuba(&self.c, &rhs.c, self.p.value()))
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        let p = self.p.value();
        Poly {
            p: self.p,
            c: self.c.iter().map(|&v| if v == 0 { 0 } else { p - v }).collect(),
        }
    }
}

macro_rules! owned_ops {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr for Poly {
            type Output = Poly;
            fn $f(self, rhs: Poly) -> Poly {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $f(self, rhs: &Poly) -> Poly {
                (&self).$f(rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}
