//! Shifted Popov form through weak Popov collisions.

use crate::upoly::{Poly, NEG_INF};

use super::{PolyMat, PolyMatError};

/// A degree shift `(s_1, ..., s_n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Shift(pub Vec<i64>);

impl Shift {
    pub fn zero(n: usize) -> Shift {
        Shift(vec![0; n])
    }

    /// `(n t, ..., 2 t, t)`, the shift under which the Hermite form is the
    /// shifted Popov form once `t` exceeds its degree.
    pub fn hermite(n: usize, t: i64) -> Shift {
        Shift((0..n).map(|j| (n - j) as i64 * t).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Rightmost column of maximal degree, or `None` for a zero row.
fn leading(row: &[Poly]) -> Option<(usize, i64)> {
    let mut best: Option<(usize, i64)> = None;
    for (j, e) in row.iter().enumerate() {
        let d = e.deg();
        if d != NEG_INF && best.is_none_or(|(_, bd)| d >= bd) {
            best = Some((j, d));
        }
    }
    best
}

/// `dst -= c x^e src`.
fn sub_shifted(dst: &mut [Poly], src: &[Poly], c: &Poly, e: usize) {
    for (d, s) in dst.iter_mut().zip(src) {
        if !s.is_zero() {
            *d = &*d - (&(c * s).shift(e));
        }
    }
}

/// Unshifted weak Popov form by Mulders-Storjohann collisions; zero rows
/// are dropped.
fn weak_popov(mut rows: Vec<Vec<Poly>>) -> Vec<Vec<Poly>> {
    loop {
        rows.retain(|r| r.iter().any(|e| !e.is_zero()));
        let lead: Vec<(usize, i64)> = rows.iter().map(|r| leading(r).expect("nonzero")).collect();
        let mut collision = None;
        'search: for i in 0..rows.len() {
            for l in i + 1..rows.len() {
                if lead[i].0 == lead[l].0 {
                    collision = Some((i, l));
                    break 'search;
                }
            }
        }
        let Some((i, l)) = collision else { return rows };
        let (hi, lo) = if lead[i].1 >= lead[l].1 { (i, l) } else { (l, i) };
        let k = lead[hi].0;
        let c = Poly::constant(rows[hi][k].lc() * rows[lo][k].lc().inv().expect("nonzero"));
        let e = (lead[hi].1 - lead[lo].1) as usize;
        let src = rows[lo].clone();
        sub_shifted(&mut rows[hi], &src, &c, e);
    }
}

/// Unshifted Popov form of the row space spanned by `rows`.
fn popov_unshifted(rows: Vec<Vec<Poly>>) -> Vec<Vec<Poly>> {
    let mut rows = weak_popov(rows);
    let key = |r: &Vec<Poly>| {
        let (k, d) = leading(r).expect("nonzero");
        (d, k)
    };
    rows.sort_by_key(key);
    let piv: Vec<(usize, i64)> = rows.iter().map(|r| leading(r).expect("nonzero")).collect();
    for i in 0..rows.len() {
        loop {
            // Largest excess deg(row_i[k_l]) - d_l over earlier rows l.
            let best = (0..i)
                .filter_map(|l| {
                    let (k, d) = piv[l];
                    let e = rows[i][k].deg();
                    (e != NEG_INF && e >= d).then(|| (e - d, l))
                })
                .max_by_key(|&(e, l)| (e, std::cmp::Reverse(l)));
            let Some((e, l)) = best else { break };
            let k = piv[l].0;
            let c = Poly::constant(rows[i][k].lc() * rows[l][k].lc().inv().expect("nonzero"));
            let src = rows[l].clone();
            sub_shifted(&mut rows[i], &src, &c, e as usize);
        }
    }
    for (r, &(k, _)) in rows.iter_mut().zip(&piv) {
        let inv = Poly::constant(r[k].lc().inv().expect("nonzero"));
        for e in r.iter_mut() {
            *e = &*e * &inv;
        }
    }
    let mut order: Vec<usize> = (0..rows.len()).collect();
    order.sort_by_key(|&i| piv[i].0);
    order.into_iter().map(|i| rows[i].clone()).collect()
}

/// The `s`-Popov form of `A`: its unique row basis in `s`-Popov form, with
/// zero rows removed.
pub fn popov_form(a: &PolyMat, s: &Shift) -> Result<PolyMat, PolyMatError> {
    let (n, p) = (a.cols(), a.modulus());
    if s.len() != n {
        return Err(PolyMatError::DimMismatch(format!("shift of length {} for {n} columns", s.len())));
    }
    let min = s.0.iter().copied().min().unwrap_or(0);
    let sh: Vec<usize> = s.0.iter().map(|&x| (x - min) as usize).collect();
    let rows: Vec<Vec<Poly>> = (0..a.rows())
        .map(|i| a.row(i).iter().zip(&sh).map(|(e, &k)| e.shift(k)).collect())
        .collect();
    let out: Vec<Vec<Poly>> = popov_unshifted(rows)
        .into_iter()
        .map(|r| {
            r.iter()
                .zip(&sh)
                .map(|(e, &k)| {
                    // Every row of the shifted module is divisible column-wise.
                    Poly::from_raw(p, e.raw().get(k..).map_or(Vec::new(), |c| c.to_vec()))
                })
                .collect()
        })
        .collect();
    Ok(PolyMat::from_rows(p, n, out).expect("rectangular"))
}
