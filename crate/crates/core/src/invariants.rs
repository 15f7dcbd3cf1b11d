//! Lattice-count geometric genus, the geometric genus of a smooth
//! hypersurface, and log canonical threshold bounds from weights.

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::lattice::Rational;

/// Solutions of `i0+i1+i2+i3 = d`, `2 i0 + i1 + i2 ≤ d - 4`, `i_k ≥ 0`.
pub fn genus_count(d: u32) -> Result<u64> {
    if d < 4 {
        return invalid("degree must be at least 4");
    }
    let d = d as i64;
    let mut n = 0;
    for i0 in 0..=d {
        for i1 in 0..=d - i0 {
            for i2 in 0..=d - i0 - i1 {
                if 2 * i0 + i1 + i2 <= d - 4 {
                    n += 1;
                }
            }
        }
    }
    Ok(n)
}

/// `d(d-2)(4d-10)/48` for even `d`, `(d-1)(d-3)(4d-2)/48` for odd `d`.
pub fn genus_closed_form(d: u32) -> Result<u64> {
    if d < 4 {
        return invalid("degree must be at least 4");
    }
    let d = d as u64;
    let num = if d.is_multiple_of(2) { d * (d - 2) * (4 * d - 10) } else { (d - 1) * (d - 3) * (4 * d - 2) };
    if num % 48 != 0 {
        return Err(Error::Inconsistency(format!("closed form is not integral at d = {d}")));
    }
    Ok(num / 48)
}

/// `Σ_{k=0}^{⌊(d-4)/2⌋} C(d-2-2k, 2)`.
pub fn genus_binomial_sum(d: u32) -> Result<u64> {
    if d < 4 {
        return invalid("degree must be at least 4");
    }
    let d = d as u64;
    Ok((0..=(d - 4) / 2).map(|k| crate::lattice::binomial(d - 2 - 2 * k, 2)).sum())
}

/// `(d-1)(d-2)(d-3)/6`.
pub fn hypersurface_pg(d: u32) -> Result<u64> {
    if d < 1 {
        return invalid("degree must be positive");
    }
    let d = d as u64;
    Ok((d - 1) * d.saturating_sub(2) * d.saturating_sub(3) / 6)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightSystem {
    weights: Vec<Rational>,
    weighted_degree: Rational,
}

impl WeightSystem {
    pub fn new(weights: Vec<Rational>, weighted_degree: Rational) -> Result<Self> {
        if weights.is_empty() {
            return invalid("weight system needs at least one weight");
        }
        if !weighted_degree.is_positive() {
            return invalid("weighted degree must be positive");
        }
        if let Some(w) = weights.iter().find(|w| !w.is_positive() || **w > weighted_degree) {
            return invalid(format!("weight {w} outside (0, {weighted_degree}]"));
        }
        Ok(WeightSystem { weights, weighted_degree })
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    pub fn weighted_degree(&self) -> &Rational {
        &self.weighted_degree
    }
}

/// `min(1, Σ w_i / weighted degree)`.
pub fn lct_weight_bound(ws: &WeightSystem) -> Rational {
    let s = ws.weights.iter().fold(Rational::zero(), |acc, w| acc + w) / &ws.weighted_degree;
    s.min(Rational::one())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum LctVerdict {
    Stable,
    Semistable,
    NoConclusion,
}

pub fn lct_threshold() -> Rational {
    Rational::new(4.into(), 5.into())
}

/// Above `4/5` forces stability, equality semistability; below says nothing.
pub fn lct_verdict(lct: &Rational) -> Result<LctVerdict> {
    if !lct.is_positive() || *lct > Rational::one() {
        return invalid(format!("log canonical threshold {lct} outside (0, 1]"));
    }
    let t = lct_threshold();
    Ok(if *lct > t {
        LctVerdict::Stable
    } else if *lct == t {
        LctVerdict::Semistable
    } else {
        LctVerdict::NoConclusion
    })
}
