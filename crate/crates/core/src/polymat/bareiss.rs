//! Fraction-free elimination over `F[x]`.

use crate::upoly::Poly;

use super::PolyMat;

#[derive(Clone, Debug)]
pub struct BareissResult {
    pub rank: usize,
    /// Pivot columns in increasing order: the column rank profile.
    pub cols: Vec<usize>,
    /// Original indices of the pivot rows, in pivot order.
    pub rows: Vec<usize>,
    /// Last pivot, which is `+-` the determinant when the input is square and
    /// nonsingular.
    pub last_pivot: Poly,
    /// Parity of the row swaps performed.
    pub swaps_odd: bool,
}

/// Bareiss elimination that skips columns with no usable pivot. Every entry
/// stays an exact minor of the input, so all divisions are exact.
pub fn bareiss(a: &PolyMat) -> BareissResult {
    let (m, n, p) = (a.rows(), a.cols(), a.modulus());
    let mut w = a.to_rows();
    let mut perm: Vec<usize> = (0..m).collect();
    let mut prev = Poly::one(p);
    let mut r = 0;
    let mut cols = Vec::new();
    let mut swaps_odd = false;
    for j in 0..n {
        if r == m {
            break;
        }
        let Some(pi) = (r..m).find(|&i| !w[i][j].is_zero()) else { continue };
        if pi != r {
            w.swap(r, pi);
            perm.swap(r, pi);
            swaps_odd = !swaps_odd;
        }
        let piv = w[r][j].clone();
        let (head, tail) = w.split_at_mut(r + 1);
        let prow = &head[r];
        for row in tail.iter_mut() {
            let f = row[j].clone();
            for k in j + 1..n {
                let num = &(&piv * &row[k]) - &(&f * &prow[k]);
                row[k] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
            row[j] = Poly::zero(p);
        }
        prev = piv;
        cols.push(j);
        r += 1;
    }
    BareissResult {
        rank: r,
        cols,
        rows: perm[..r].to_vec(),
        last_pivot: prev,
        swaps_odd,
    }
}

/// Rank over `F(x)` and the column rank profile.
pub fn rank_and_profile(a: &PolyMat) -> (usize, Vec<usize>) {
    let b = bareiss(a);
    (b.rank, b.cols)
}

/// Determinant of a square polynomial matrix.
pub fn det_bareiss(a: &PolyMat) -> Poly {
    assert_eq!(a.rows(), a.cols(), "determinant of a non-square matrix");
    let n = a.rows();
    let p = a.modulus();
    if n == 0 {
        return Poly::one(p);
    }
    let b = bareiss(a);
    if b.rank < n {
        return Poly::zero(p);
    }
    if b.swaps_odd {
        -b.last_pivot
    } else {
        b.last_pivot
    }
}
