//! Published values for quintic surfaces used to label and cross-check
//! computed output.

use crate::lattice::OneParamSubgroup;

pub const REFERENCE_DEGREE: u32 = 5;

/// The ten critical one-parameter subgroups for `d = 5`, in their
/// conventional order `λ1..λ10`.
pub const REFERENCE_CRITICAL: [[i64; 4]; 10] = [
    [1, 0, 0, -1],
    [2, 1, -1, -2],
    [4, 2, -1, -5],
    [2, 1, 0, -3],
    [3, 0, -1, -2],
    [5, 1, -2, -4],
    [2, 1, 1, -4],
    [2, 2, -1, -3],
    [7, 1, -4, -4],
    [8, -1, -2, -5],
];

/// Published boundary component dimensions keyed by the 1-based critical
/// label. `λ3, λ6` share a component, as do `λ4, λ5`.
pub const REFERENCE_BOUNDARY_DIMS: [(usize, i64); 6] = [(1, 6), (2, 1), (3, 0), (4, 1), (5, 1), (6, 0)];

/// 1-based label of `lambda` among the reference critical subgroups.
pub fn reference_label(d: u32, lambda: &OneParamSubgroup) -> Option<usize> {
    if d != REFERENCE_DEGREE {
        return None;
    }
    REFERENCE_CRITICAL.iter().position(|w| *w == lambda.0).map(|i| i + 1)
}

pub fn reference_lambda(label: usize) -> Option<OneParamSubgroup> {
    label.checked_sub(1).and_then(|i| REFERENCE_CRITICAL.get(i)).map(|w| OneParamSubgroup(*w))
}

pub fn reference_boundary_dim(d: u32, lambda: &OneParamSubgroup) -> Option<i64> {
    let label = reference_label(d, lambda)?;
    REFERENCE_BOUNDARY_DIMS.iter().find(|(l, _)| *l == label).map(|&(_, dim)| dim)
}
