//! Hermite form by unimodular 2x2 row transformations.
//!
//! Convention: each row's pivot is its first nonzero entry, pivot indices
//! increase down the rows, pivots are monic, and every other entry of a pivot
//! column has lower degree than the pivot. This is the `(nt, ..., 2t, t)`
//! shifted Popov form for large `t`.

use crate::upoly::Poly;

use super::PolyMat;

fn combine(rows: &mut [Vec<Poly>], r: usize, i: usize, a: [&Poly; 4]) {
    let [s, t, u, v] = a;
    let (lo, hi) = rows.split_at_mut(i);
    let (x, y) = (&mut lo[r], &mut hi[0]);
    for k in 0..x.len() {
        let nx = &(s * &x[k]) + &(t * &y[k]);
        let ny = &(u * &x[k]) + &(v * &y[k]);
        x[k] = nx;
        y[k] = ny;
    }
}

fn axpy(rows: &mut [Vec<Poly>], dst: usize, src: usize, q: &Poly) {
    let s = rows[src].clone();
    for (d, e) in rows[dst].iter_mut().zip(&s) {
        if !e.is_zero() {
            *d = &*d - &(q * e);
        }
    }
}

fn scale_row(rows: &mut [Vec<Poly>], i: usize, k: &Poly) {
    for e in rows[i].iter_mut() {
        *e = &*e * k;
    }
}

/// Returns `(H, U)` with `U` unimodular `m x m`, the first `r` rows of `U A`
/// equal to `H` (the Hermite form, `r = rank A`) and the remaining rows zero.
pub fn hermite_form(a: &PolyMat) -> (PolyMat, PolyMat) {
    let (m, n, p) = (a.rows(), a.cols(), a.modulus());
    let mut w = a.to_rows();
    let mut u = PolyMat::identity(p, m).to_rows();
    let mut r = 0;
    for j in 0..n {
        if r == m {
            break;
        }
        for i in r + 1..m {
            if w[i][j].is_zero() {
                continue;
            }
            if w[r][j].is_zero() {
                w.swap(r, i);
                u.swap(r, i);
                continue;
            }
            let (x, y) = (w[r][j].clone(), w[i][j].clone());
            let (g, s, t) = x.xgcd(&y).expect("not both zero");
            // [[s, t], [-y/g, x/g]] has determinant (s x + t y) / g = 1.
            let yg = -y.div_exact(&g).expect("gcd divides");
            let xg = x.div_exact(&g).expect("gcd divides");
            let coef = [&s, &t, &yg, &xg];
            combine(&mut w, r, i, coef);
            combine(&mut u, r, i, coef);
        }
        if w[r][j].is_zero() {
            continue;
        }
        let k = Poly::constant(w[r][j].lc().inv().expect("nonzero"));
        scale_row(&mut w, r, &k);
        scale_row(&mut u, r, &k);
        for i in 0..r {
            if w[i][j].deg() >= w[r][j].deg() {
                let (q, _) = w[i][j].divrem(&w[r][j]).expect("nonzero pivot");
                axpy(&mut w, i, r, &q);
                axpy(&mut u, i, r, &q);
            }
        }
        r += 1;
    }
    let h = PolyMat::from_rows(p, n, w[..r].to_vec()).expect("rectangular");
    let u = PolyMat::from_rows(p, m, u).expect("rectangular");
    (h, u)
}
