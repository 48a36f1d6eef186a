//! False instances for soundness experiments.
//!
//! Where possible the error polynomial of a fixture has its roots inside `S`,
//! so that a cheater really does win on some challenges.

use crate::ff::Modulus;
use crate::polymat::{kernel_basis_left, PolyMat};
use crate::protocols::Statement;
use crate::upoly::Poly;

/// A named false statement.
#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: &'static str,
    pub statement: Statement,
}

fn pm(p: Modulus, rows: &[&[&[i64]]]) -> PolyMat {
    PolyMat::from_i64s(p, rows)
}

fn poly(p: Modulus, c: &[i64]) -> Poly {
    Poly::from_i64s(p, c)
}

/// `[[1, 1+x^2], [0, x^2]]`: full rank, not saturated.
pub fn m2(p: Modulus) -> PolyMat {
    pm(p, &[&[&[1], &[1, 0, 1]], &[&[0], &[0, 0, 1]]])
}

/// `[[1, 1], [x^2, x^2+x], [x, x]]`: rank 2, row space `{[a, a + x b]}`.
pub fn m1(p: Modulus) -> PolyMat {
    pm(p, &[&[&[1], &[1]], &[&[0, 0, 1], &[0, 1, 1]], &[&[0, 1], &[0, 1]]])
}

/// One false instance for each protocol with its own soundness bound.
pub fn core_fixtures(p: Modulus) -> Vec<Fixture> {
    let x = |c: i64| poly(p, &[-c, 1]);
    let diag = |ds: Vec<Poly>| {
        let n = ds.len();
        PolyMat::from_fn(p, n, n, |i, j| if i == j { ds[i].clone() } else { Poly::zero(p) })
    };
    let det3 = &(&x(0) * &x(1)) * &x(2);
    let rank1 = {
        let u = [poly(p, &[1]), poly(p, &[0, 1]), poly(p, &[1, 1])];
        let w = [poly(p, &[1]), poly(p, &[2]), poly(p, &[0, 1])];
        PolyMat::from_fn(p, 3, 3, |i, j| &u[i] * &w[j])
    };
    let (a, b) = (
        pm(p, &[&[&[1, 1], &[0, 0, 1]], &[&[2], &[1, 0, 3]]]),
        pm(p, &[&[&[0, 1, 1], &[4]], &[&[1], &[0, 2]]]),
    );
    let mut c = a.mul(&b).expect("2x2");
    c.set(0, 0, c.get(0, 0) + &det3);
    vec![
        Fixture {
            name: "diag(x, x-1, x-2, x-3)",
            statement: Statement::Singularity { a: diag(vec![x(0), x(1), x(2), x(3)]) },
        },
        Fixture {
            name: "rank-2 3x3 of degree 1",
            statement: Statement::Nonsingularity {
                a: pm(p, &[&[&[0, 1], &[1], &[0, 1]], &[&[1], &[1, 1], &[2, 2]], &[&[1, 1], &[2, 1], &[2, 3]]]),
            },
        },
        Fixture { name: "rank-1 outer product, rho = 2", statement: Statement::RankLb { a: rank1, rho: 2 } },
        Fixture {
            name: "diag(x, x-1, 0), rho = 1",
            statement: Statement::RankUb { a: diag(vec![x(0), x(1), Poly::zero(p)]), rho: 1 },
        },
        Fixture {
            name: "diag(x, x-1, x-2) with det + x(x-5)(x-9)",
            statement: Statement::Determinant {
                a: diag(vec![x(0), x(1), x(2)]),
                delta: &det3 + &(&(&x(0) * &x(5)) * &x(9)),
            },
        },
        Fixture {
            name: "A = I, v off by x(x-1)",
            statement: Statement::SystemSolve {
                a: PolyMat::identity(p, 2),
                b: vec![poly(p, &[0, 0, 1]), poly(p, &[1])],
                v: vec![&poly(p, &[0, 0, 1]) + &(&x(0) * &x(1)), poly(p, &[1])],
                delta: poly(p, &[1]),
            },
        },
        Fixture { name: "C = AB + x(x-1)(x-2) e_11", statement: Statement::MatMul { a, b, c } },
        Fixture {
            name: "A = [x, x^2], v = [1, x]",
            statement: Statement::Frrsm { a: pm(p, &[&[&[0, 1], &[0, 0, 1]]]), v: vec![poly(p, &[1]), poly(p, &[0, 1])] },
        },
        Fixture { name: "(x, x^2)", statement: Statement::Coprime { fs: vec![poly(p, &[0, 1]), poly(p, &[0, 0, 1])] } },
        Fixture {
            name: "[0, x] against [[1, 1+x^2], [0, x^2]]",
            statement: Statement::Rsm { a: m2(p), v: vec![Poly::zero(p), poly(p, &[0, 1])] },
        },
    ]
}

/// False instances of the composite protocols.
pub fn composite_fixtures(p: Modulus) -> Vec<Fixture> {
    let a = pm(p, &[&[&[1, 1], &[0, 1]], &[&[2], &[1, 0, 1]], &[&[1, 2], &[1, 1, 1]]]);
    let k = kernel_basis_left(&a);
    vec![
        Fixture { name: "I_2 in rowsp M2", statement: Statement::RsSubset { a: PolyMat::identity(p, 2), b: m2(p) } },
        Fixture { name: "M1 vs I_2", statement: Statement::RsEquality { a: m1(p), b: PolyMat::identity(p, 2) } },
        Fixture {
            name: "Hermite-shaped diag(1, x) for I_2",
            statement: Statement::Hermite { a: PolyMat::identity(p, 2), h: pm(p, &[&[&[1], &[0]], &[&[0], &[0, 1]]]) },
        },
        Fixture { name: "M2 saturated", statement: Statement::Saturated { a: m2(p) } },
        Fixture { name: "M1 with basis M2", statement: Statement::SatBasis { a: m1(p), b: m2(p) } },
        Fixture {
            name: "[x, x^2] completable",
            statement: Statement::UnimodCompletable { a: pm(p, &[&[&[0, 1], &[0, 0, 1]]]) },
        },
        Fixture {
            name: "x K for a kernel basis K",
            statement: Statement::KernelBasis { a, b: k.scale(&poly(p, &[0, 1])) },
        },
    ]
}
