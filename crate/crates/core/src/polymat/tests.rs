use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

use super::*;
use crate::ff::Modulus;
use crate::matfield::{det_field, FieldMat};
use crate::upoly::{Poly, RatFunc};

fn f7() -> Modulus {
    Modulus::new(7).unwrap()
}

fn big() -> Modulus {
    Modulus::default()
}

fn pm(p: Modulus, rows: &[&[&[i64]]]) -> PolyMat {
    PolyMat::from_i64s(p, rows)
}

fn m1(p: Modulus) -> PolyMat {
    pm(p, &[&[&[1], &[1]], &[&[0, 0, 1], &[0, 1, 1]], &[&[0, 1], &[0, 1]]])
}

fn m2(p: Modulus) -> PolyMat {
    pm(p, &[&[&[1], &[1, 0, 1]], &[&[], &[0, 0, 1]]])
}

fn xv(p: Modulus, c: &[&[i64]]) -> Vec<Poly> {
    c.iter().map(|c| Poly::from_i64s(p, c)).collect()
}

// Independent product oracle: explicit coefficient convolution.
fn mul_oracle(a: &PolyMat, b: &PolyMat) -> PolyMat {
    let p = a.modulus();
    PolyMat::from_fn(p, a.rows(), b.cols(), |i, j| {
        let mut acc = vec![p.zero(); 64];
        for k in 0..a.cols() {
            for (s, x) in a.get(i, k).coeffs().iter().enumerate() {
                for (t, y) in b.get(k, j).coeffs().iter().enumerate() {
                    acc[s + t] += *x * *y;
                }
            }
        }
        Poly::from_coeffs(p, &acc)
    })
}

#[test]
fn eval_examples() {
    let p = big();
    let c = FieldMat::from_u64s(p, &[&[1, 2], &[3, 4]]);
    assert_eq!(PolyMat::from_field(&c).eval(p.elem(9)), c);
    let x = pm(p, &[&[&[0, 1]]]);
    assert_eq!(x.eval(p.elem(3)).get(0, 0).value(), 3);
    let mut rng = ChaCha20Rng::seed_from_u64(1);
    for _ in 0..10 {
        let a = PolyMat::random(p, 4, 4, 3, &mut rng);
        let b = PolyMat::random(p, 4, 4, 3, &mut rng);
        let al = p.elem(rng.gen_range(0..p.value()));
        assert_eq!(a.mul(&b).unwrap().eval(al), a.eval(al).mul(&b.eval(al)).unwrap());
    }
}

#[test]
fn mul_examples() {
    let p = big();
    let mut rng = ChaCha20Rng::seed_from_u64(2);
    let a = PolyMat::random(p, 3, 3, 2, &mut rng);
    assert_eq!(a.mul(&PolyMat::identity(p, 3)).unwrap(), a);
    let x = pm(p, &[&[&[0, 1]]]);
    assert_eq!(x.mul(&x).unwrap(), pm(p, &[&[&[0, 0, 1]]]));
    let b = PolyMat::random(p, 3, 3, 2, &mut rng);
    let c = a.mul(&b).unwrap();
    assert_eq!(c, mul_oracle(&a, &b));
    assert!(c.deg() <= a.deg() + b.deg());
    assert!(a.mul(&PolyMat::zero(p, 2, 2)).is_err());
}

#[test]
fn rank_examples() {
    let p = big();
    assert_eq!(rank_and_profile(&PolyMat::identity(p, 4)), (4, vec![0, 1, 2, 3]));
    assert_eq!(rank_and_profile(&m1(p)), (2, vec![0, 1]));
    let mut rng = ChaCha20Rng::seed_from_u64(3);
    let a = PolyMat::random(p, 2, 4, 2, &mut rng);
    assert_eq!(rank_and_profile(&a.vstack(&a).unwrap()).0, rank_and_profile(&a).0);
    // Planted rank: a 5x2 times 2x4 product has rank 2.
    let l = PolyMat::random(p, 5, 2, 1, &mut rng);
    let r = PolyMat::random(p, 2, 4, 1, &mut rng);
    assert_eq!(rank_and_profile(&l.mul(&r).unwrap()).0, 2);
}

#[test]
fn bareiss_det_matches_evaluation() {
    let p = big();
    let mut rng = ChaCha20Rng::seed_from_u64(4);
    for n in 0..5 {
        let a = PolyMat::random(p, n, n, 2, &mut rng);
        let d = det_bareiss(&a);
        assert!(d.deg() <= (2 * n) as i64);
        for _ in 0..3 {
            let al = p.elem(rng.gen_range(0..p.value()));
            assert_eq!(d.eval(al), det_field(&a.eval(al)).unwrap());
        }
    }
    let a = pm(p, &[&[&[0, 1], &[]], &[&[1], &[0, 1]]]);
    assert_eq!(det_bareiss(&a), Poly::from_i64s(p, &[0, 0, 1]));
}

#[test]
fn rational_solve_examples() {
    let p = f7();
    let v = xv(p, &[&[1, 2], &[3]]);
    match rational_solve_left(&PolyMat::identity(p, 2), &v).unwrap() {
        RatSolve::Solution(u) => assert_eq!(u.numerators(), v),
        other => panic!("{other:?}"),
    }
    let a = pm(p, &[&[&[0, 1], &[0, 0, 1]]]);
    match rational_solve_left(&a, &xv(p, &[&[1], &[0, 1]])).unwrap() {
        RatSolve::Solution(u) => {
            let want = RatFunc::new(Poly::one(p), Poly::x(p)).unwrap();
            assert_eq!(u.entries(), &[want]);
        }
        other => panic!("{other:?}"),
    }
    let dup = pm(p, &[&[&[1], &[0, 1], &[2]], &[&[1], &[0, 1], &[2]]]);
    assert_eq!(rational_solve_left(&dup, &xv(p, &[&[1], &[], &[]])).unwrap(), RatSolve::LowRank);
    // [1, 0] is not a rational multiple of [1, x].
    let row = pm(p, &[&[&[1], &[0, 1]]]);
    assert_eq!(rational_solve_left(&row, &xv(p, &[&[1], &[]])).unwrap(), RatSolve::NoSolution);
}

fn check_hermite(a: &PolyMat) -> PolyMat {
    let (h, u) = hermite_form(a);
    let (ok, _) = check_hermite_shape(&h);
    assert!(ok, "shape failed for {h:?}");
    let ua = u.mul(a).unwrap();
    let r = h.rows();
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            if i < r {
                assert_eq!(ua.get(i, j), h.get(i, j));
            } else {
                assert!(ua.get(i, j).is_zero());
            }
        }
    }
    let d = det_bareiss(&u);
    assert!(d.deg() == 0, "U not unimodular: det = {d:?}");
    assert_eq!(r, rank_and_profile(a).0);
    h
}

#[test]
fn hermite_examples() {
    let p = f7();
    let h0 = pm(p, &[&[&[1], &[0, 1], &[2]], &[&[], &[0, 0, 1], &[1]]]);
    let (h, u) = hermite_form(&h0);
    assert_eq!(h, h0);
    assert_eq!(u, PolyMat::identity(p, 2));
    let a = pm(p, &[&[&[0, 1], &[0, 0, 1]], &[&[1], &[0, 1]]]);
    assert_eq!(check_hermite(&a), pm(p, &[&[&[1], &[0, 1]]]));
    let mut rng = ChaCha20Rng::seed_from_u64(5);
    for _ in 0..30 {
        let (m, n) = (rng.gen_range(1..5), rng.gen_range(1..5));
        let a = PolyMat::random(big(), m, n, 2, &mut rng);
        check_hermite(&a);
    }
}

#[test]
fn hermite_is_invariant_under_unimodular_transforms() {
    let p = big();
    let mut rng = ChaCha20Rng::seed_from_u64(6);
    for _ in 0..20 {
        let (m, n) = (rng.gen_range(1..5), rng.gen_range(1..5));
        let a = PolyMat::random(p, m, n, 2, &mut rng);
        let u = random_unimodular(p, m, 1, 8, &mut rng);
        assert_eq!(hermite_form(&u.mul(&a).unwrap()).0, hermite_form(&a).0);
    }
}

#[test]
fn popov_examples() {
    let p = big();
    assert_eq!(popov_form(&PolyMat::identity(p, 3), &Shift::zero(3)).unwrap(), PolyMat::identity(p, 3));
    let mut rng = ChaCha20Rng::seed_from_u64(7);
    for _ in 0..20 {
        let (m, n) = (rng.gen_range(1..5), rng.gen_range(1..5));
        let a = PolyMat::random(p, m, n, 2, &mut rng);
        let h = hermite_form(&a).0;
        let t = h.deg().max(0) + 1;
        let s = Shift::hermite(n, t);
        assert_eq!(popov_form(&a, &s).unwrap(), h);
        let shifts = [Shift::zero(n), Shift((0..n as i64).collect()), Shift((0..n).map(|_| rng.gen_range(-3..4)).collect())];
        let u = random_unimodular(p, m, 1, 8, &mut rng);
        let ua = u.mul(&a).unwrap();
        for s in &shifts {
            let pf = popov_form(&a, s).unwrap();
            assert!(check_popov_shape(&pf, s).0, "{pf:?} {s:?}");
            assert_eq!(pf.rows(), h.rows());
            assert_eq!(popov_form(&ua, s).unwrap(), pf);
            assert_eq!(hermite_form(&pf).0, h);
        }
    }
    assert!(popov_form(&PolyMat::identity(p, 2), &Shift::zero(3)).is_err());
}

#[test]
fn shape_examples() {
    let p = f7();
    assert!(check_hermite_shape(&PolyMat::identity(p, 3)).0);
    let nonmonic = pm(p, &[&[&[2], &[0, 1]]]);
    assert!(!check_hermite_shape(&nonmonic).0);
    let good = pm(p, &[&[&[1], &[0, 1]], &[&[], &[0, 0, 1]]]);
    assert!(check_hermite_shape(&good).0);
    // Raise the above-pivot entry to the pivot degree.
    let bad = pm(p, &[&[&[1], &[0, 0, 1]], &[&[], &[0, 0, 1]]]);
    assert!(!check_hermite_shape(&bad).0);
    let zero_row = pm(p, &[&[&[1], &[]], &[&[], &[]]]);
    assert!(!check_hermite_shape(&zero_row).0);

    assert!(check_popov_shape(&PolyMat::identity(p, 3), &Shift::zero(3)).0);
    let t = good.deg() + 1;
    assert!(check_popov_shape(&good, &Shift::hermite(2, t)).0);
    let swapped = good.select_rows(&[1, 0]);
    assert!(!check_popov_shape(&swapped, &Shift::hermite(2, t)).0);
    let (_, prof) = check_hermite_shape(&good);
    assert_eq!(prof.indices, vec![0, 1]);
    assert_eq!(prof.degrees, vec![0, 2]);
}

#[test]
fn kernel_examples() {
    let p = f7();
    let mut rng = ChaCha20Rng::seed_from_u64(8);
    let a = PolyMat::random(big(), 3, 3, 2, &mut rng);
    assert_eq!(kernel_basis_left(&a).rows(), 0);
    let col = pm(p, &[&[&[1]], &[&[1]]]);
    let k = kernel_basis_left(&col);
    assert_eq!(k.rows(), 1);
    // Up to a unit: [1, -1] scaled by a constant.
    assert_eq!(k.get(0, 0), &(-k.get(0, 1)));
    assert!(k.get(0, 0).deg() == 0);
    for _ in 0..20 {
        let (m, n, r) = (rng.gen_range(1..5), rng.gen_range(1..5), rng.gen_range(0..3));
        let l = PolyMat::random(big(), m, r, 1, &mut rng);
        let rr = PolyMat::random(big(), r, n, 1, &mut rng);
        let a = l.mul(&rr).unwrap();
        let k = kernel_basis_left(&a);
        let rank = rank_and_profile(&a).0;
        assert!(k.mul(&a).unwrap().is_zero());
        assert_eq!(k.rows(), m - rank);
        assert_eq!(rank_and_profile(&k).0, m - rank);
        // A left kernel basis is saturated.
        assert_eq!(saturation_basis(&k), k);
    }
}

#[test]
fn saturation_examples() {
    let p = big();
    let i2 = PolyMat::identity(p, 2);
    assert_eq!(saturation_basis(&m1(p)), i2);
    assert_eq!(saturation_basis(&m2(p)), i2);
    let mut rng = ChaCha20Rng::seed_from_u64(9);
    let a = PolyMat::random(p, 3, 3, 2, &mut rng);
    assert_eq!(saturation_basis(&a), PolyMat::identity(p, 3));
    for _ in 0..10 {
        let a = PolyMat::random(p, 2, 3, 2, &mut rng).scale(&Poly::from_i64s(p, &[1, 1]));
        let s = saturation_basis(&a);
        for i in 0..a.rows() {
            assert!(row_membership_oracle(&s, a.row(i)));
        }
        assert_eq!(saturation_basis(&s), s);
    }
    let wide = pm(p, &[&[&[0, 1], &[0, 0, 1]]]);
    assert_eq!(saturation_basis(&wide), pm(p, &[&[&[1], &[0, 1]]]));
}

#[test]
fn membership_examples() {
    let p = big();
    let zx = xv(p, &[&[], &[0, 1]]);
    assert!(row_membership_oracle(&m1(p), &zx));
    assert!(!row_membership_oracle(&m2(p), &zx));
    let mut rng = ChaCha20Rng::seed_from_u64(10);
    for _ in 0..10 {
        let a = PolyMat::random(p, 3, 3, 2, &mut rng);
        assert!(row_membership_oracle(&a, a.row(1)));
        let v: Vec<Poly> = (0..3).map(|j| &(a.get(0, j) * &Poly::x(p)) + a.get(2, j)).collect();
        assert!(row_membership_oracle(&a, &v));
    }
}

#[test]
fn toeplitz_examples() {
    let p = big();
    let z = Toeplitz::new(2, 3, vec![p.zero(); 4]).unwrap();
    assert!(z.materialize(p).is_zero());
    assert!(Toeplitz::new(2, 3, vec![p.zero(); 3]).is_err());
    let mut rng = ChaCha20Rng::seed_from_u64(11);
    let a = PolyMat::random(p, 3, 4, 2, &mut rng);
    let row = Toeplitz::new(1, 3, vec![p.elem(2), p.elem(5), p.elem(7)]).unwrap();
    let ca = row.apply_poly(&a);
    // Row vector [7, 5, 2] times A.
    let want: Vec<Poly> = (0..4)
        .map(|j| &(&a.get(0, j).scale(p.elem(7)) + &a.get(1, j).scale(p.elem(5))) + &a.get(2, j).scale(p.elem(2)))
        .collect();
    assert_eq!(ca.row_vec(0), want);
    for _ in 0..10 {
        let spec: Vec<_> = (0..5).map(|_| p.elem(rng.gen_range(0..p.value()))).collect();
        let c = Toeplitz::new(2, 4, spec).unwrap();
        let a = PolyMat::random(p, 4, 3, 2, &mut rng);
        let al = p.elem(rng.gen_range(0..p.value()));
        let direct = c.materialize(p).mul(&a.eval(al)).unwrap();
        assert_eq!(c.apply_field(&a.eval(al)), direct);
        assert_eq!(c.apply_poly(&a).eval(al), direct);
    }
}
