//! Univariate polynomials and rational functions over `Z/pZ`.

mod poly;
mod ratfunc;

pub use poly::{Poly, NEG_INF};
pub use ratfunc::{RatFunc, RatVec};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("xgcd of two zero polynomials")]
    BothZero,
    #[error("interpolation points share an abscissa")]
    DuplicateAbscissa,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division leaves a remainder")]
    InexactDivision,
    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u64, u64),
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ff::Modulus;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha20Rng;

    fn f7() -> Modulus {
        Modulus::new(7).unwrap()
    }

    fn p7(c: &[i64]) -> Poly {
        Poly::from_i64s(f7(), c)
    }

    fn rand_poly(rng: &mut ChaCha20Rng, m: Modulus, deg: usize) -> Poly {
        let c: Vec<u64> = (0..=deg).map(|_| rng.gen_range(0..m.value())).collect();
        Poly::from_u64s(m, &c)
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(p7(&[1, 1]) * p7(&[-1, 1]), p7(&[6, 0, 1]));
        assert!((p7(&[1, 2, 3]) * Poly::zero(f7())).is_zero());
        let (q, r) = p7(&[0, 0, 1]).divrem(&p7(&[0, 1])).unwrap();
        assert_eq!(q, p7(&[0, 1]));
        assert!(r.is_zero());
        assert_eq!(p7(&[1]).divrem(&Poly::zero(f7())), Err(PolyError::DivisionByZero));
        assert_eq!(Poly::zero(f7()).deg(), NEG_INF);
    }

    #[test]
    fn eval_examples() {
        let m = f7();
        assert_eq!(p7(&[3, 2, 1]).eval(m.elem(2)).value(), 4);
        assert_eq!(p7(&[5]).eval(m.elem(6)).value(), 5);
        assert!(Poly::zero(m).eval(m.elem(3)).is_zero());
        // x^2 + 1 over F_7 has no roots; x^2 - 2 has roots 3 and 4.
        let f = p7(&[-2, 0, 1]);
        let roots: Vec<u64> = (0..7).filter(|&a| f.eval(m.elem(a)).is_zero()).collect();
        assert_eq!(roots, vec![3, 4]);
        for r in roots {
            assert!(f.eval(m.elem(r)).is_zero());
        }
    }

    #[test]
    fn xgcd_examples() {
        let m = f7();
        let f = p7(&[2, 3, 1]);
        let (g, s, _) = f.xgcd(&f).unwrap();
        assert_eq!(g, f.monic());
        assert!(s.is_zero());

        let (a, b) = (p7(&[1, 0, 1]), p7(&[3, 1]));
        let (g, s, t) = a.xgcd(&b).unwrap();
        assert!(g.is_one());
        assert_eq!(&(&s * &a) + &(&t * &b), Poly::one(m));

        let h = p7(&[1, 3]);
        let (g, s, t) = Poly::zero(m).xgcd(&h).unwrap();
        assert_eq!(g, h.monic());
        assert!(s.is_zero());
        assert_eq!(t, Poly::constant(m.elem(3).inv().unwrap()));

        assert_eq!(Poly::zero(m).xgcd(&Poly::zero(m)), Err(PolyError::BothZero));
    }

    #[test]
    fn bezout_degrees_are_minimal() {
        let m = Modulus::new(101).unwrap();
        let mut rng = ChaCha20Rng::seed_from_u64(3);
        for _ in 0..200 {
            let (df, dh) = (rng.gen_range(1..8), rng.gen_range(1..8));
            let f = rand_poly(&mut rng, m, df);
            let h = rand_poly(&mut rng, m, dh);
            let (g, s, t) = f.xgcd(&h).unwrap();
            assert_eq!(&(&s * &f) + &(&t * &h), g);
            if f.deg() > g.deg() && h.deg() > g.deg() {
                assert!(s.deg() < h.deg() - g.deg());
                assert!(t.deg() < f.deg() - g.deg());
            }
        }
    }

    #[test]
    fn interpolation_examples() {
        let m = f7();
        let c = Poly::interpolate(m, &[(m.zero(), m.elem(5))]).unwrap();
        assert_eq!(c, p7(&[5]));
        let l = Poly::interpolate(m, &[(m.elem(0), m.elem(1)), (m.elem(1), m.elem(2))]).unwrap();
        assert_eq!(l, p7(&[1, 1]));
        assert_eq!(
            Poly::interpolate(m, &[(m.one(), m.one()), (m.one(), m.zero())]),
            Err(PolyError::DuplicateAbscissa)
        );
        let q = Modulus::new(1009).unwrap();
        let mut rng = ChaCha20Rng::seed_from_u64(5);
        for _ in 0..50 {
            let f = rand_poly(&mut rng, q, 9);
            let pts: Vec<_> = (0..12).map(|i| (q.elem(i), f.eval(q.elem(i)))).collect();
            assert_eq!(Poly::interpolate(q, &pts).unwrap(), f);
        }
    }

    #[test]
    fn ratvec_examples() {
        let m = f7();
        let one = Poly::one(m);
        let rv = RatVec::normalize(m, vec![(p7(&[1, 2]), one.clone()), (p7(&[3]), one.clone())]).unwrap();
        assert!(rv.common_den().is_one());

        let rv = RatVec::normalize(m, vec![(one.clone(), p7(&[0, 1])), (one.clone(), p7(&[0, 0, 1]))]).unwrap();
        assert_eq!(rv.common_den(), &p7(&[0, 0, 1]));
        assert_eq!(rv.numerators(), vec![p7(&[0, 1]), one.clone()]);

        let r = RatFunc::new(p7(&[0, 1]), p7(&[0, 1])).unwrap();
        assert!(r.is_poly());
        assert_eq!(r.num(), &one);

        assert_eq!(
            RatVec::normalize(m, vec![(one.clone(), Poly::zero(m))]),
            Err(PolyError::ZeroDenominator)
        );
    }

    #[test]
    fn denominator_is_one_iff_polynomial() {
        let m = Modulus::new(101).unwrap();
        let mut rng = ChaCha20Rng::seed_from_u64(8);
        for _ in 0..200 {
            let f = rand_poly(&mut rng, m, 4);
            let g = rand_poly(&mut rng, m, 2);
            if g.is_zero() {
                continue;
            }
            // (f*g)/g is always a polynomial; f/g is one iff g | f.
            assert!(RatFunc::new(&f * &g, g.clone()).unwrap().is_poly());
            let divides = f.rem(&g).unwrap().is_zero();
            assert_eq!(RatFunc::new(f.clone(), g.clone()).unwrap().is_poly(), divides);
        }
    }

    #[test]
    fn karatsuba_matches_schoolbook() {
        let m = Modulus::default();
        let mut rng = ChaCha20Rng::seed_from_u64(11);
        for (da, db) in [(40, 40), (100, 37), (33, 300), (64, 65), (250, 250)] {
            let a = rand_poly(&mut rng, m, da);
            let b = rand_poly(&mut rng, m, db);
            assert_eq!(&a * &b, a.mul_schoolbook(&b));
        }
    }

    #[test]
    fn ratfunc_field_ops() {
        let m = Modulus::new(101).unwrap();
        let mut rng = ChaCha20Rng::seed_from_u64(13);
        for _ in 0..100 {
            let a = RatFunc::new(rand_poly(&mut rng, m, 3), rand_poly(&mut rng, m, 2) + Poly::one(m));
            let b = RatFunc::new(rand_poly(&mut rng, m, 3), rand_poly(&mut rng, m, 2) + Poly::one(m));
            let (Ok(a), Ok(b)) = (a, b) else { continue };
            let s = a.add(&b);
            assert_eq!(s.sub(&b), a);
            if !b.is_zero() {
                assert_eq!(a.mul(&b).div(&b).unwrap(), a);
            }
            assert!(s.den().is_monic());
            assert!(s.num().gcd(s.den()).is_one() || s.is_zero());
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]
        #[test]
        fn divrem_roundtrip(seed in any::<u64>(), df in 0usize..=16, dg in 0usize..=16) {
            let m = Modulus::default();
            let mut rng = ChaCha20Rng::seed_from_u64(seed);
            let f = rand_poly(&mut rng, m, df);
            let g = rand_poly(&mut rng, m, dg);
            prop_assume!(!g.is_zero());
            let (q, r) = f.divrem(&g).unwrap();
            prop_assert_eq!(&(&q * &g) + &r, f);
            prop_assert!(r.deg() < g.deg());
        }

        #[test]
        fn xgcd_identity(seed in any::<u64>(), df in 0usize..=10, dg in 0usize..=10) {
            let m = Modulus::new(13).unwrap();
            let mut rng = ChaCha20Rng::seed_from_u64(seed);
            let f = rand_poly(&mut rng, m, df);
            let g = rand_poly(&mut rng, m, dg);
            prop_assume!(!(f.is_zero() && g.is_zero()));
            let (d, s, t) = f.xgcd(&g).unwrap();
            prop_assert_eq!(&(&s * &f) + &(&t * &g), d.clone());
            prop_assert!(f.rem(&d).unwrap().is_zero() && g.rem(&d).unwrap().is_zero());
        }

        #[test]
        fn eval_is_homomorphic(seed in any::<u64>(), a in 0u64..1_000_003) {
            let m = Modulus::new(1_000_003).unwrap();
            let mut rng = ChaCha20Rng::seed_from_u64(seed);
            let f = rand_poly(&mut rng, m, 7);
            let g = rand_poly(&mut rng, m, 5);
            let x = m.elem(a);
            prop_assert_eq!((&f * &g).eval(x), f.eval(x) * g.eval(x));
            prop_assert_eq!((&f + &g).eval(x), f.eval(x) + g.eval(x));
        }
    }
}
