//! Row-space membership over `F[x]` by reduction against the Hermite form.

use crate::upoly::Poly;

use super::{hermite_form, shape::check_hermite_shape, PolyMat};

/// True iff `v` is an `F[x]`-combination of the rows of `A`.
pub fn row_membership_oracle(a: &PolyMat, v: &[Poly]) -> bool {
    assert_eq!(v.len(), a.cols(), "vector length");
    let (h, _) = hermite_form(a);
    let (_, prof) = check_hermite_shape(&h);
    let mut w = v.to_vec();
    for (i, &k) in prof.indices.iter().enumerate() {
        let (q, r) = w[k].divrem(h.get(i, k)).expect("nonzero pivot");
        if !r.is_zero() {
            return false;
        }
        for (x, hij) in w.iter_mut().zip(h.row(i)) {
            *x = &*x - &(&q * hij);
        }
    }
    w.iter().all(|e| e.is_zero())
}
