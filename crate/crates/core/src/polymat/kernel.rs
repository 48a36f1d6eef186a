//! Left kernel bases and saturation bases.

use super::{hermite_form, popov_form, PolyMat, Shift};

/// Basis of the left kernel `{k : k A = 0}`, as an `(m - r) x m` matrix in
/// Popov form. The rows are the trailing rows of the Hermite transformation.
pub fn kernel_basis_left(a: &PolyMat) -> PolyMat {
    let (h, u) = hermite_form(a);
    let m = a.rows();
    let idx: Vec<usize> = (h.rows()..m).collect();
    let k = u.select_rows(&idx);
    popov_form(&k, &Shift::zero(m)).expect("shift length matches")
}

/// Basis of the right kernel `{w : A w = 0}`, as an `n x (n - r)` matrix.
pub fn right_kernel_basis(a: &PolyMat) -> PolyMat {
    kernel_basis_left(&a.transpose()).transpose()
}

/// Basis of `Sat(A)`: the left kernel of a right kernel basis of `A`,
/// normalized to Popov form.
pub fn saturation_basis(a: &PolyMat) -> PolyMat {
    kernel_basis_left(&right_kernel_basis(a))
}
