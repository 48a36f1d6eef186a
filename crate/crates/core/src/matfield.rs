//! Dense linear algebra over the prime field.
//!
//! A single PLUQ elimination kernel backs rank, column rank profile,
//! determinant and the sparse representative; a reduced echelon routine
//! handles solving and null vectors.

use std::fmt;

use thiserror::Error;

use crate::ff::{FieldElement, Modulus, SampleSet, UniformSource};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatError {
    #[error("matrix is {0}x{1}, expected square")]
    NotSquare(usize, usize),
    #[error("dimension mismatch: {0}")]
    DimMismatch(String),
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldMat {
    m: usize,
    n: usize,
    p: Modulus,
    data: Vec<FieldElement>,
}

impl FieldMat {
    pub fn zero(p: Modulus, m: usize, n: usize) -> FieldMat {
        FieldMat { m, n, p, data: vec![p.zero(); m * n] }
    }

    pub fn identity(p: Modulus, n: usize) -> FieldMat {
        let mut a = FieldMat::zero(p, n, n);
        for i in 0..n {
            a.set(i, i, p.one());
        }
        a
    }

    pub fn from_rows(p: Modulus, rows: &[Vec<FieldElement>]) -> Result<FieldMat, MatError> {
        let m = rows.len();
        let n = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != n) {
            return Err(MatError::DimMismatch("ragged rows".into()));
        }
        Ok(FieldMat { m, n, p, data: rows.concat() })
    }

    pub fn from_u64s(p: Modulus, rows: &[&[u64]]) -> FieldMat {
        let r: Vec<Vec<FieldElement>> =
            rows.iter().map(|r| r.iter().map(|&v| p.elem(v)).collect()).collect();
        FieldMat::from_rows(p, &r).expect("rectangular input")
    }

    pub fn from_fn(p: Modulus, m: usize, n: usize, mut f: impl FnMut(usize, usize) -> FieldElement) -> FieldMat {
        let mut data = Vec::with_capacity(m * n);
        for i in 0..m {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        FieldMat { m, n, p, data }
    }

    pub fn random<S: UniformSource + ?Sized>(p: Modulus, m: usize, n: usize, s: SampleSet, src: &mut S) -> FieldMat {
        FieldMat::from_fn(p, m, n, |_, _| s.sample(src, p))
    }

    pub fn rows(&self) -> usize {
        self.m
    }

    pub fn cols(&self) -> usize {
        self.n
    }

    pub fn modulus(&self) -> Modulus {
        self.p
    }

    pub fn get(&self, i: usize, j: usize) -> FieldElement {
        self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: FieldElement) {
        self.data[i * self.n + j] = v;
    }

    pub fn row(&self, i: usize) -> &[FieldElement] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn entries(&self) -> &[FieldElement] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| e.is_zero())
    }

    pub fn transpose(&self) -> FieldMat {
        FieldMat::from_fn(self.p, self.n, self.m, |i, j| self.get(j, i))
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> FieldMat {
        FieldMat::from_fn(self.p, rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]))
    }

    pub fn mul(&self, b: &FieldMat) -> Result<FieldMat, MatError> {
        if self.n != b.m {
            return Err(MatError::DimMismatch(format!(
                "{}x{} times {}x{}",
                self.m, self.n, b.m, b.n
            )));
        }
        let mut c = FieldMat::zero(self.p, self.m, b.n);
        for i in 0..self.m {
            for k in 0..self.n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..b.n {
                    let v = c.get(i, j) + a * b.get(k, j);
                    c.set(i, j, v);
                }
            }
        }
        Ok(c)
    }

    /// `A w` for a column vector `w`.
    pub fn mul_vec(&self, w: &[FieldElement]) -> Vec<FieldElement> {
        assert_eq!(w.len(), self.n, "vector length");
        (0..self.m)
            .map(|i| dot(self.row(i), w, self.p))
            .collect()
    }

    /// `v A` for a row vector `v`.
    pub fn vec_mul(&self, v: &[FieldElement]) -> Vec<FieldElement> {
        assert_eq!(v.len(), self.m, "vector length");
        let mut out = vec![self.p.zero(); self.n];
        for (i, &vi) in v.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            for (o, &a) in out.iter_mut().zip(self.row(i)) {
                *o += vi * a;
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        pluq(self).rank
    }
}

impl fmt::Debug for FieldMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<u64>> = (0..self.m)
            .map(|i| self.row(i).iter().map(|e| e.value()).collect())
            .collect();
        write!(f, "{rows:?}")
    }
}

pub fn dot(a: &[FieldElement], b: &[FieldElement], p: Modulus) -> FieldElement {
    a.iter().zip(b).fold(p.zero(), |acc, (&x, &y)| acc + x * y)
}

/// `A = P L U Q` stored through permutation vectors: row `i` of `L U` is row
/// `rows[i]` of `A`, column `j` of `L U` is column `cols[j]` of `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PluqFactorization {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    /// Unit lower-triangular, `m x r`.
    pub l: FieldMat,
    /// Upper-triangular with nonzero diagonal, `r x n`.
    pub u: FieldMat,
    pub rank: usize,
}

impl PluqFactorization {
    /// Column rank profile: the lexicographically first maximal set of
    /// independent columns, in increasing order.
    pub fn column_profile(&self) -> Vec<usize> {
        let mut c = self.cols[..self.rank].to_vec();
        c.sort_unstable();
        c
    }

    /// Rows of `A` used as pivots, in increasing order.
    pub fn row_profile(&self) -> Vec<usize> {
        let mut r = self.rows[..self.rank].to_vec();
        r.sort_unstable();
        r
    }

    /// Rebuilds `P L U Q`.
    pub fn reconstruct(&self) -> FieldMat {
        let lu = self.l.mul(&self.u).expect("inner dims agree");
        let (m, n) = (lu.rows(), lu.cols());
        let mut a = FieldMat::zero(lu.modulus(), m, n);
        for i in 0..m {
            for j in 0..n {
                a.set(self.rows[i], self.cols[j], lu.get(i, j));
            }
        }
        a
    }
}

/// Sign of a permutation given as an image vector.
pub fn perm_sign(perm: &[usize]) -> i64 {
    let mut seen = vec![false; perm.len()];
    let mut sign = 1;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut k = start;
        while !seen[k] {
            seen[k] = true;
            k = perm[k];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

/// True when `perm` is a permutation of `0..perm.len()`.
pub fn is_permutation(perm: &[usize]) -> bool {
    let mut seen = vec![false; perm.len()];
    for &k in perm {
        if k >= perm.len() || seen[k] {
            return false;
        }
        seen[k] = true;
    }
    true
}

/// PLUQ with pivot search in column order, so the pivot columns form the
/// column rank profile.
pub fn pluq(a: &FieldMat) -> PluqFactorization {
    let (m, n, p) = (a.m, a.n, a.p);
    let mut w = a.clone();
    let mut rows: Vec<usize> = (0..m).collect();
    let mut cols: Vec<usize> = (0..n).collect();
    let mut r = 0;
    let mut search = 0;
    while r < m && search < n {
        let found = (search..n).find_map(|j| (r..m).find(|&i| !w.get(i, j).is_zero()).map(|i| (i, j)));
        let Some((pi, pj)) = found else { break };
        if pi != r {
            for j in 0..n {
                let t = w.get(r, j);
                w.set(r, j, w.get(pi, j));
                w.set(pi, j, t);
            }
            rows.swap(r, pi);
        }
        if pj != r {
            for i in 0..m {
                let t = w.get(i, r);
                w.set(i, r, w.get(i, pj));
                w.set(i, pj, t);
            }
            cols.swap(r, pj);
        }
        let inv = w.get(r, r).inv().expect("pivot is nonzero");
        for i in r + 1..m {
            let f = w.get(i, r) * inv;
            if f.is_zero() {
                continue;
            }
            w.set(i, r, f);
            for j in r + 1..n {
                let v = w.get(i, j) - f * w.get(r, j);
                w.set(i, j, v);
            }
        }
        r += 1;
        // Columns between the old search start and `pj` are zero below the
        // pivot rows and stay zero, so the next search can start at `pj`.
        search = pj.max(r);
    }
    let l = FieldMat::from_fn(p, m, r, |i, j| match i.cmp(&j) {
        std::cmp::Ordering::Equal => p.one(),
        std::cmp::Ordering::Greater => w.get(i, j),
        std::cmp::Ordering::Less => p.zero(),
    });
    let u = FieldMat::from_fn(p, r, n, |i, j| if j >= i { w.get(i, j) } else { p.zero() });
    PluqFactorization { rows, cols, l, u, rank: r }
}

/// Reduced row echelon form in place; returns the pivot columns.
fn rref(w: &mut FieldMat) -> Vec<usize> {
    let (m, n) = (w.m, w.n);
    let mut pivots = Vec::new();
    let mut r = 0;
    for j in 0..n {
        if r == m {
            break;
        }
        let Some(pi) = (r..m).find(|&i| !w.get(i, j).is_zero()) else { continue };
        if pi != r {
            for k in 0..n {
                let t = w.get(r, k);
                w.set(r, k, w.get(pi, k));
                w.set(pi, k, t);
            }
        }
        let inv = w.get(r, j).inv().expect("nonzero pivot");
        for k in j..n {
            let v = w.get(r, k) * inv;
            w.set(r, k, v);
        }
        for i in 0..m {
            if i == r {
                continue;
            }
            let f = w.get(i, j);
            if f.is_zero() {
                continue;
            }
            for k in j..n {
                let v = w.get(i, k) - f * w.get(r, k);
                w.set(i, k, v);
            }
        }
        pivots.push(j);
        r += 1;
    }
    pivots
}

/// A basis of `{w : A w = 0}`, one vector per free column in increasing order.
pub fn right_kernel(a: &FieldMat) -> Vec<Vec<FieldElement>> {
    let mut w = a.clone();
    let pivots = rref(&mut w);
    let p = a.p;
    let free: Vec<usize> = (0..a.n).filter(|j| !pivots.contains(j)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![p.zero(); a.n];
            v[f] = p.one();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = -w.get(i, f);
            }
            v
        })
        .collect()
}

/// A nonzero `v` with `v A = 0`, or `None` when `A` has full row rank.
pub fn nullvector_left(a: &FieldMat) -> Option<Vec<FieldElement>> {
    right_kernel(&a.transpose()).into_iter().next()
}

/// Some `w` with `A w = b` (free variables set to zero), or `None` when the
/// system is inconsistent.
pub fn solve_right(a: &FieldMat, b: &[FieldElement]) -> Option<Vec<FieldElement>> {
    assert_eq!(b.len(), a.m, "right-hand side length");
    let p = a.p;
    let mut aug = FieldMat::from_fn(p, a.m, a.n + 1, |i, j| if j < a.n { a.get(i, j) } else { b[i] });
    let pivots = rref(&mut aug);
    if pivots.last() == Some(&a.n) {
        return None;
    }
    let mut w = vec![p.zero(); a.n];
    for (i, &pc) in pivots.iter().enumerate() {
        w[pc] = aug.get(i, a.n);
    }
    Some(w)
}

/// `gamma` supported on the column rank profile with `A gamma = A v`, or
/// `None` when `rank(A) > rho`. Returns `v` itself when `rho >= n`.
pub fn sparse_representative(a: &FieldMat, v: &[FieldElement], rho: usize) -> Option<Vec<FieldElement>> {
    assert_eq!(v.len(), a.n, "vector length");
    if rho >= a.n {
        return Some(v.to_vec());
    }
    let f = pluq(a);
    if f.rank > rho {
        return None;
    }
    let prof = f.column_profile();
    let target = a.mul_vec(v);
    let all_rows: Vec<usize> = (0..a.m).collect();
    let sub = a.submatrix(&all_rows, &prof);
    let g = solve_right(&sub, &target).expect("target lies in the column space");
    let mut gamma = vec![a.p.zero(); a.n];
    for (k, &c) in prof.iter().enumerate() {
        gamma[c] = g[k];
    }
    Some(gamma)
}

/// Determinant through PLUQ.
pub fn det_field(a: &FieldMat) -> Result<FieldElement, MatError> {
    if a.m != a.n {
        return Err(MatError::NotSquare(a.m, a.n));
    }
    let f = pluq(a);
    Ok(det_from_pluq(&f, a.n))
}

/// `sign(P) sign(Q) prod(diag U)` when the rank is full, else zero.
pub fn det_from_pluq(f: &PluqFactorization, n: usize) -> FieldElement {
    let p = f.u.modulus();
    if f.rank < n {
        return p.zero();
    }
    let mut d = (0..n).fold(p.one(), |acc, i| acc * f.u.get(i, i));
    if perm_sign(&f.rows) * perm_sign(&f.cols) < 0 {
        d = -d;
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha20Rng;

    fn f7() -> Modulus {
        Modulus::new(7).unwrap()
    }

    // Independent oracles: plain row reduction for rank and cofactor
    // expansion for the determinant.
    fn rank_oracle(a: &FieldMat) -> usize {
        let mut rows: Vec<Vec<FieldElement>> = (0..a.rows()).map(|i| a.row(i).to_vec()).collect();
        let mut rank = 0;
        for j in 0..a.cols() {
            if let Some(k) = (rank..rows.len()).find(|&k| !rows[k][j].is_zero()) {
                rows.swap(rank, k);
                let inv = rows[rank][j].inv().unwrap();
                let piv = rows[rank].clone();
                for row in rows.iter_mut().skip(rank + 1) {
                    let f = row[j] * inv;
                    for (x, y) in row.iter_mut().zip(&piv) {
                        *x -= f * *y;
                    }
                }
                rank += 1;
            }
        }
        rank
    }

    fn det_oracle(a: &FieldMat) -> FieldElement {
        let n = a.rows();
        let p = a.modulus();
        if n == 0 {
            return p.one();
        }
        let mut acc = p.zero();
        for j in 0..n {
            let rest: Vec<usize> = (0..n).filter(|&k| k != j).collect();
            let rows: Vec<usize> = (1..n).collect();
            let minor = det_oracle(&a.submatrix(&rows, &rest));
            let term = a.get(0, j) * minor;
            acc = if j % 2 == 0 { acc + term } else { acc - term };
        }
        acc
    }

    fn random_mat(rng: &mut ChaCha20Rng, p: Modulus, m: usize, n: usize) -> FieldMat {
        FieldMat::from_fn(p, m, n, |_, _| p.elem(rng.gen_range(0..p.value())))
    }

    #[test]
    fn pluq_examples() {
        let p = Modulus::default();
        let f = pluq(&FieldMat::identity(p, 4));
        assert_eq!(f.rank, 4);
        assert_eq!(f.l, FieldMat::identity(p, 4));
        assert_eq!(f.u, FieldMat::identity(p, 4));
        assert_eq!(pluq(&FieldMat::zero(p, 3, 5)).rank, 0);

        let mut rng = ChaCha20Rng::seed_from_u64(1);
        let b = random_mat(&mut rng, p, 6, 2);
        let c = random_mat(&mut rng, p, 2, 4);
        let a = b.mul(&c).unwrap();
        let f = pluq(&a);
        assert_eq!(f.rank, 2);
        assert_eq!(rank_oracle(&a), 2);
        // Minor enumeration: some 2x2 minor is nonzero, every 3x3 minor vanishes.
        let idx = |k: usize, n: usize| -> Vec<Vec<usize>> {
            let mut out = Vec::new();
            for mask in 0u32..(1 << n) {
                if mask.count_ones() as usize == k {
                    out.push((0..n).filter(|&i| mask >> i & 1 == 1).collect());
                }
            }
            out
        };
        let any2 = idx(2, 6).iter().any(|r| idx(2, 4).iter().any(|c| !det_oracle(&a.submatrix(r, c)).is_zero()));
        let all3 = idx(3, 6).iter().all(|r| idx(3, 4).iter().all(|c| det_oracle(&a.submatrix(r, c)).is_zero()));
        assert!(any2 && all3);
        assert_eq!(f.reconstruct(), a);
    }

    #[test]
    fn column_profile_is_lexicographically_first() {
        let p = f7();
        let a = FieldMat::from_u64s(p, &[&[0, 1, 2, 0], &[0, 2, 4, 1]]);
        assert_eq!(pluq(&a).column_profile(), vec![1, 3]);
    }

    #[test]
    fn nullvector_examples() {
        let p = f7();
        let a = FieldMat::from_u64s(p, &[&[1, 0], &[0, 1], &[1, 1]]);
        let v = nullvector_left(&a).unwrap();
        assert!(a.vec_mul(&v).iter().all(|e| e.is_zero()));
        // Proportional to (1, 1, -1).
        let k = v[0];
        assert_eq!(v, vec![k, k, -k]);
        assert!(nullvector_left(&FieldMat::identity(p, 3)).is_none());
        let z = FieldMat::from_u64s(p, &[&[1, 2], &[0, 0], &[3, 1]]);
        let v = nullvector_left(&z).unwrap();
        assert_eq!(v.iter().map(|e| e.value()).collect::<Vec<_>>(), vec![0, 1, 0]);
    }

    #[test]
    fn solve_examples() {
        let p = f7();
        let b = vec![p.elem(3), p.elem(5)];
        assert_eq!(solve_right(&FieldMat::identity(p, 2), &b).unwrap(), b);
        let a = FieldMat::from_u64s(p, &[&[1, 2], &[2, 4]]);
        assert!(solve_right(&a, &[p.zero(), p.zero()]).unwrap().iter().all(|e| e.is_zero()));
        // Column space is spanned by (1, 2); (1, 0) is outside it.
        let prof = pluq(&a).column_profile();
        assert_eq!(prof, vec![0]);
        assert!(solve_right(&a, &[p.one(), p.zero()]).is_none());
    }

    #[test]
    fn sparse_representative_examples() {
        let p = Modulus::new(101).unwrap();
        let v = vec![p.elem(4), p.elem(9), p.elem(1)];
        let a = FieldMat::from_u64s(p, &[&[1, 2, 3], &[2, 4, 6]]);
        assert_eq!(sparse_representative(&a, &v, 3).unwrap(), v);
        let g = sparse_representative(&a, &v, 1).unwrap();
        assert_eq!(g.iter().filter(|e| !e.is_zero()).count(), 1);
        assert_eq!(a.mul_vec(&g), a.mul_vec(&v));
        let full = FieldMat::from_u64s(p, &[&[1, 0, 3], &[0, 1, 6]]);
        assert!(sparse_representative(&full, &v, 1).is_none());
    }

    #[test]
    fn det_examples() {
        let p = f7();
        assert_eq!(det_field(&FieldMat::identity(p, 3)).unwrap(), p.one());
        assert!(det_field(&FieldMat::from_u64s(p, &[&[1, 2], &[2, 4]])).unwrap().is_zero());
        assert!(det_field(&FieldMat::from_u64s(p, &[&[2, 1], &[1, 4]])).unwrap().is_zero());
        assert_eq!(det_field(&FieldMat::zero(p, 2, 3)), Err(MatError::NotSquare(2, 3)));
        let swap = FieldMat::from_u64s(p, &[&[0, 1], &[1, 0]]);
        assert_eq!(det_field(&swap).unwrap(), p.elem_i64(-1));
    }

    #[test]
    fn pluq_reconstructs_many_random_matrices() {
        let mut rng = ChaCha20Rng::seed_from_u64(77);
        for t in 0..1000 {
            let p = if t % 2 == 0 { Modulus::new(5).unwrap() } else { Modulus::default() };
            let (m, n) = (rng.gen_range(1..=16), rng.gen_range(1..=16));
            // Low-rank products show up often enough to exercise rank deficiency.
            let a = if t % 3 == 0 {
                let k = rng.gen_range(0..=m.min(n));
                random_mat(&mut rng, p, m, k).mul(&random_mat(&mut rng, p, k, n)).unwrap()
            } else {
                random_mat(&mut rng, p, m, n)
            };
            let f = pluq(&a);
            assert_eq!(f.reconstruct(), a);
            assert_eq!(f.rank, rank_oracle(&a));
            assert!(is_permutation(&f.rows) && is_permutation(&f.cols));
            for i in 0..f.rank {
                assert!(!f.u.get(i, i).is_zero());
            }
        }
    }

    #[test]
    fn det_matches_cofactor_oracle() {
        let mut rng = ChaCha20Rng::seed_from_u64(5);
        let p = Modulus::new(13).unwrap();
        for _ in 0..200 {
            let n = rng.gen_range(0..=5);
            let a = random_mat(&mut rng, p, n, n);
            assert_eq!(det_field(&a).unwrap(), det_oracle(&a));
        }
    }

    proptest! {
        #[test]
        fn nullvector_is_valid(seed in any::<u64>(), m in 1usize..8, n in 1usize..8) {
            let p = Modulus::new(3).unwrap();
            let mut rng = ChaCha20Rng::seed_from_u64(seed);
            let a = random_mat(&mut rng, p, m, n);
            match nullvector_left(&a) {
                Some(v) => {
                    prop_assert!(v.iter().any(|e| !e.is_zero()));
                    prop_assert!(a.vec_mul(&v).iter().all(|e| e.is_zero()));
                }
                None => prop_assert_eq!(rank_oracle(&a), m),
            }
        }

        #[test]
        fn det_is_multiplicative(seed in any::<u64>(), n in 1usize..7) {
            let p = Modulus::default();
            let mut rng = ChaCha20Rng::seed_from_u64(seed);
            let a = random_mat(&mut rng, p, n, n);
            let b = random_mat(&mut rng, p, n, n);
            prop_assert_eq!(det_field(&a.mul(&b).unwrap()).unwrap(), det_field(&a).unwrap() * det_field(&b).unwrap());
        }
    }
}
