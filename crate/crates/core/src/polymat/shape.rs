//! Local shape checks for Hermite and shifted Popov forms.
//!
//! These run on the Verifier side in time linear in the number of entries.

use crate::upoly::NEG_INF;

use super::{PolyMat, Shift};

/// Pivot indices (0-based, strictly increasing when valid) and pivot degrees.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PivotProfile {
    pub indices: Vec<usize>,
    pub degrees: Vec<i64>,
}

fn increasing(v: &[usize]) -> bool {
    v.windows(2).all(|w| w[0] < w[1])
}

/// True when each pivot-column entry outside the pivot row has lower degree
/// than the pivot.
fn pivot_columns_reduced(h: &PolyMat, prof: &PivotProfile) -> bool {
    prof.indices.iter().zip(&prof.degrees).enumerate().all(|(i, (&k, &d))| {
        (0..h.rows()).all(|i2| i2 == i || h.get(i2, k).deg() < d)
    })
}

/// Hermite shape: pivot = first nonzero entry of each row, pivots monic with
/// strictly increasing indices, and every other entry of a pivot column has
/// lower degree than the pivot. Any zero row fails.
pub fn check_hermite_shape(h: &PolyMat) -> (bool, PivotProfile) {
    let mut prof = PivotProfile::default();
    for i in 0..h.rows() {
        let Some(k) = (0..h.cols()).find(|&j| !h.get(i, j).is_zero()) else {
            return (false, prof);
        };
        prof.indices.push(k);
        prof.degrees.push(h.get(i, k).deg());
        if !h.get(i, k).is_monic() {
            return (false, prof);
        }
    }
    let ok = h.rows() <= h.cols() && increasing(&prof.indices) && pivot_columns_reduced(h, &prof);
    (ok, prof)
}

/// `s`-Popov shape: the pivot of a row is the rightmost entry reaching its
/// shifted degree; pivots are monic, indices strictly increase, and every
/// other entry in a pivot column has lower degree. Any zero row fails.
pub fn check_popov_shape(pm: &PolyMat, s: &Shift) -> (bool, PivotProfile) {
    let mut prof = PivotProfile::default();
    if s.len() != pm.cols() {
        return (false, prof);
    }
    for i in 0..pm.rows() {
        let mut best: Option<(usize, i64)> = None;
        for j in 0..pm.cols() {
            let d = pm.get(i, j).deg();
            if d == NEG_INF {
                continue;
            }
            let sd = d + s.0[j];
            if best.is_none_or(|(_, b)| sd >= b) {
                best = Some((j, sd));
            }
        }
        let Some((k, _)) = best else { return (false, prof) };
        prof.indices.push(k);
        prof.degrees.push(pm.get(i, k).deg());
        if !pm.get(i, k).is_monic() {
            return (false, prof);
        }
    }
    let ok = pm.rows() <= pm.cols() && increasing(&prof.indices) && pivot_columns_reduced(pm, &prof);
    (ok, prof)
}
