//! Seeded generators for matrices with planted structure and for true
//! instances of every protocol.

use rand::Rng;
use thiserror::Error;

use crate::ff::{FieldElement, Modulus};
use crate::matfield::{det_field, FieldMat};
use crate::polymat::{
    bareiss, det_bareiss, hermite_form, kernel_basis_left, popov_form, random_unimodular, rational_solve_left,
    saturation_basis, PolyMat, RatSolve, Shift,
};
use crate::protocols::Statement;
use crate::upoly::Poly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InstanceError {
    #[error("invalid instance spec: {0}")]
    SpecInvalid(String),
}

/// Size limits of a generated instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Dims {
    pub m: usize,
    pub n: usize,
    pub d: usize,
}

pub fn random_poly<R: Rng + ?Sized>(p: Modulus, d: usize, rng: &mut R) -> Poly {
    let c: Vec<u64> = (0..=d).map(|_| rng.gen_range(0..p.value())).collect();
    Poly::from_u64s(p, &c)
}

pub fn random_polys<R: Rng + ?Sized>(p: Modulus, len: usize, d: usize, rng: &mut R) -> Vec<Poly> {
    (0..len).map(|_| random_poly(p, d, rng)).collect()
}

/// Factors `X` (`m x r`) and `Y` (`r x n`) whose product has rank at most
/// `r`, with the degree `d` split between them.
pub fn planted_rank_factors<R: Rng + ?Sized>(
    p: Modulus,
    m: usize,
    n: usize,
    r: usize,
    d: usize,
    rng: &mut R,
) -> (PolyMat, PolyMat) {
    let x = PolyMat::random(p, m, r, d.div_ceil(2), rng);
    let y = PolyMat::random(p, r, n, d / 2, rng);
    (x, y)
}

/// An `m x n` matrix of rank at most `r`.
pub fn planted_rank<R: Rng + ?Sized>(p: Modulus, m: usize, n: usize, r: usize, d: usize, rng: &mut R) -> PolyMat {
    let (x, y) = planted_rank_factors(p, m, n, r, d, rng);
    x.mul(&y).expect("inner dimension r")
}

/// `(A, v, lambda)` with `v = lambda A` and `rank A <= r`.
pub fn planted_membership<R: Rng + ?Sized>(
    p: Modulus,
    m: usize,
    n: usize,
    r: usize,
    d: usize,
    rng: &mut R,
) -> (PolyMat, Vec<Poly>, Vec<Poly>) {
    let a = planted_rank(p, m, n, r, d, rng);
    let lambda = random_polys(p, m, d.min(2), rng);
    let v = a.left_mul_vec(&lambda).expect("length m");
    (a, v, lambda)
}

/// `(A, H, U)` with `A = U B` for unimodular `U` and `H` the Hermite form
/// of `A`.
pub fn planted_normal_form<R: Rng + ?Sized>(
    p: Modulus,
    m: usize,
    n: usize,
    d: usize,
    rng: &mut R,
) -> (PolyMat, PolyMat, PolyMat) {
    let b = PolyMat::random(p, m, n, d, rng);
    let u = random_unimodular(p, m, 1, m + 1, rng);
    let a = u.mul(&b).expect("square U");
    let (h, _) = hermite_form(&a);
    (a, h, u)
}

/// A random unimodular matrix and its inverse.
pub fn unimodular_pair<R: Rng + ?Sized>(p: Modulus, n: usize, rng: &mut R) -> (PolyMat, PolyMat) {
    let u = random_unimodular(p, n, 1, n + 1, rng);
    let rows = (0..n)
        .map(|i| {
            let e: Vec<Poly> = (0..n).map(|j| if i == j { Poly::one(p) } else { Poly::zero(p) }).collect();
            match rational_solve_left(&u, &e) {
                Ok(RatSolve::Solution(w)) if w.is_poly() => w.numerators(),
                other => panic!("unimodular matrix without polynomial inverse: {other:?}"),
            }
        })
        .collect();
    let inv = PolyMat::from_rows(p, n, rows).expect("square");
    (u, inv)
}

fn full_row_rank<R: Rng + ?Sized>(p: Modulus, m: usize, n: usize, d: usize, rng: &mut R) -> PolyMat {
    loop {
        let a = PolyMat::random(p, m, n, d, rng);
        if bareiss(&a).rank == m.min(n) {
            return a;
        }
    }
}

/// A saturated full-rank `m x n` matrix.
fn saturated_matrix<R: Rng + ?Sized>(p: Modulus, m: usize, n: usize, d: usize, rng: &mut R) -> PolyMat {
    if m <= n {
        saturation_basis(&full_row_rank(p, m, n, d, rng))
    } else {
        let (u, _) = unimodular_pair(p, n, rng);
        u.vstack(&PolyMat::random(p, m - n, n, d, rng)).expect("n columns")
    }
}

/// A random true instance of `id` with dimensions at most `dims`.
pub fn true_instance<R: Rng + ?Sized>(
    id: &str,
    p: Modulus,
    dims: Dims,
    rng: &mut R,
) -> Result<Statement, InstanceError> {
    if dims.m == 0 || dims.n == 0 {
        return Err(InstanceError::SpecInvalid("dimensions must be positive".into()));
    }
    let m = rng.gen_range(1..=dims.m);
    let n = rng.gen_range(1..=dims.n);
    let d = rng.gen_range(0..=dims.d);
    let sq = rng.gen_range(1..=dims.m.min(dims.n));
    Ok(match id {
        "singularity" => Statement::Singularity { a: planted_rank(p, sq, sq, sq - 1, d, rng) },
        "nonsingularity" => Statement::Nonsingularity { a: full_row_rank(p, sq, sq, d, rng) },
        "rank_lb" | "rank_ub" | "rank" => {
            let r = rng.gen_range(0..=m.min(n));
            let a = planted_rank(p, m, n, r, d, rng);
            let rank = bareiss(&a).rank;
            match id {
                "rank_lb" => Statement::RankLb { rho: rng.gen_range(0..=rank), a },
                "rank_ub" => Statement::RankUb { rho: rng.gen_range(rank..=m.min(n) + 1), a },
                _ => Statement::Rank { a, rho: rank },
            }
        }
        "determinant" => {
            let a = PolyMat::random(p, sq, sq, d, rng);
            Statement::Determinant { delta: det_bareiss(&a), a }
        }
        "field_det" => {
            let r = if rng.gen_bool(0.5) { sq } else { sq - 1 };
            let x = FieldMat::from_fn(p, sq, r, |_, _| p.elem(rng.gen_range(0..p.value())));
            let y = FieldMat::from_fn(p, r, sq, |_, _| p.elem(rng.gen_range(0..p.value())));
            let b = if r == 0 { FieldMat::zero(p, sq, sq) } else { x.mul(&y).expect("inner r") };
            let beta: FieldElement = det_field(&b).expect("square");
            Statement::FieldDet { b, beta }
        }
        "system_solve" => {
            let a = PolyMat::random(p, m, n, d, rng);
            let u = random_polys(p, n, d, rng);
            let g = random_poly(p, d, rng);
            let b = a.transpose().left_mul_vec(&u).expect("length n");
            let v = u.iter().map(|e| e * &g).collect();
            Statement::SystemSolve { a, b, v, delta: g }
        }
        "matmul" => {
            let k = rng.gen_range(1..=dims.n);
            let a = PolyMat::random(p, m, k, d, rng);
            let b = PolyMat::random(p, k, n, rng.gen_range(0..=dims.d), rng);
            let c = a.mul(&b).expect("inner k");
            Statement::MatMul { a, b, c }
        }
        "inverse" => {
            let (a, b) = unimodular_pair(p, sq, rng);
            Statement::Inverse { a, b }
        }
        "frrsm" => {
            let a = full_row_rank(p, m.min(n), n, d, rng);
            let lambda = random_polys(p, a.rows(), d, rng);
            let v = a.left_mul_vec(&lambda).expect("length m");
            Statement::Frrsm { a, v }
        }
        "coprime" => {
            let t = rng.gen_range(1..=4);
            loop {
                let fs: Vec<Poly> = if t == 1 {
                    vec![Poly::constant(p.elem(rng.gen_range(1..p.value())))]
                } else {
                    random_polys(p, t, d.max(1), rng)
                };
                if fs.iter().fold(Poly::zero(p), |g, f| g.gcd(f)).is_one() {
                    break Statement::Coprime { fs };
                }
            }
        }
        "rsm" => {
            let r = rng.gen_range(0..=m.min(n));
            let (a, v, _) = planted_membership(p, m, n, r, d, rng);
            Statement::Rsm { a, v }
        }
        "rs_subset" => {
            let l = rng.gen_range(1..=dims.m);
            let b = PolyMat::random(p, l, n, d, rng);
            let x = PolyMat::random(p, m, l, 1, rng);
            Statement::RsSubset { a: x.mul(&b).expect("inner l"), b }
        }
        "rs_equality" => {
            let b = PolyMat::random(p, m, n, d, rng);
            let (u, _) = unimodular_pair(p, m, rng);
            Statement::RsEquality { a: u.mul(&b).expect("square U"), b }
        }
        "row_basis" | "hermite" => {
            let (a, h, _) = planted_normal_form(p, m, n, d, rng);
            if id == "row_basis" {
                Statement::RowBasis { a, b: h }
            } else {
                Statement::Hermite { a, h }
            }
        }
        "spopov" => {
            let (a, _, _) = planted_normal_form(p, m, n, d, rng);
            let shift = Shift((0..n).map(|_| rng.gen_range(-2..=2)).collect());
            let pm = popov_form(&a, &shift).expect("shift length n");
            Statement::Spopov { a, shift, p: pm }
        }
        "saturated" => Statement::Saturated { a: saturated_matrix(p, m, n, d, rng) },
        "sat_basis" => {
            let r = rng.gen_range(1..=m.min(n));
            let a = planted_rank(p, m, n, r, d, rng);
            Statement::SatBasis { b: saturation_basis(&a), a }
        }
        "unimod_completable" => {
            let n = n.max(2);
            let m = rng.gen_range(1..n);
            let (u, _) = unimodular_pair(p, n, rng);
            Statement::UnimodCompletable { a: u.select_rows(&(0..m).collect::<Vec<_>>()) }
        }
        "kernel_basis" => {
            let r = rng.gen_range(0..=m.min(n));
            let a = planted_rank(p, m, n, r, d, rng);
            Statement::KernelBasis { b: kernel_basis_left(&a), a }
        }
        other => return Err(InstanceError::SpecInvalid(format!("unknown protocol {other:?}"))),
    })
}

#[cfg(test)]
mod tests {
    use rand::SeedableRng;
    use rand_chacha::ChaCha20Rng;

    use super::*;
    use crate::adversary::holds;
    use crate::polymat::row_membership_oracle;
    use crate::protocols::PROTOCOL_IDS;

    #[test]
    fn true_instances_hold() {
        let p = Modulus::new(1_000_003).unwrap();
        let mut rng = ChaCha20Rng::seed_from_u64(1);
        for id in PROTOCOL_IDS {
            for _ in 0..15 {
                let st = true_instance(id, p, Dims { m: 4, n: 4, d: 2 }, &mut rng).unwrap();
                assert_eq!(st.id(), id);
                assert!(st.validate(p).is_ok(), "{id}: {st:?}");
                assert!(holds(&st), "{id}: {st:?}");
            }
        }
        assert!(true_instance("nope", p, Dims { m: 2, n: 2, d: 1 }, &mut rng).is_err());
        assert!(true_instance("rank", p, Dims { m: 0, n: 2, d: 1 }, &mut rng).is_err());
    }

    #[test]
    fn planted_generators_keep_their_witnesses() {
        let p = Modulus::new(101).unwrap();
        let mut rng = ChaCha20Rng::seed_from_u64(2);
        for _ in 0..10 {
            let (a, v, lambda) = planted_membership(p, 3, 4, 2, 2, &mut rng);
            assert_eq!(a.left_mul_vec(&lambda).unwrap(), v);
            assert!(row_membership_oracle(&a, &v));
            assert!(bareiss(&a).rank <= 2);
            let (a, h, u) = planted_normal_form(p, 3, 3, 2, &mut rng);
            assert_eq!(h, hermite_form(&a).0);
            assert!(det_bareiss(&u).deg() == 0);
            let (u, inv) = unimodular_pair(p, 3, &mut rng);
            assert_eq!(u.mul(&inv).unwrap(), PolyMat::identity(p, 3));
        }
    }
}
