//! Weights of a one-parameter subgroup on the Luna slice at a `λ`-fixed
//! hypersurface, the induced Kirwan fiber data, and a dimension estimate
//! for the corresponding boundary stratum of the quotient.

use std::collections::BTreeMap;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::lattice::{enumerate_monomials, zero_set, MonomialConfiguration, MonomialIndex, OneParamSubgroup, Rational, NVARS};
use crate::linalg::rank;
use crate::reference::{reference_boundary_dim, reference_label};
use crate::weights::WeightMultiset;

pub const DEFAULT_SEED: u64 = 20_240_607;

/// `{a_i - a_j : i ≠ j} ∪ {0, 0, 0}`, the weights on `sl4`.
pub fn adjoint_weights(lambda: &OneParamSubgroup) -> WeightMultiset {
    let a = lambda.0;
    let mut out = WeightMultiset::new();
    for i in 0..NVARS {
        for j in 0..NVARS {
            if i != j {
                out.insert(a[i] - a[j]);
            }
        }
    }
    out.insert_n(0, NVARS - 1);
    out
}

/// Weights on the coefficient space of degree-`d` forms. A coefficient of
/// `m` scales by `t^{-λ·m}` under the induced action.
pub fn form_weights(lambda: &OneParamSubgroup, d: u32) -> Result<WeightMultiset> {
    Ok(enumerate_monomials(d)?.iter().map(|m| -lambda.pairing(m)).collect())
}

/// Normal space weights at a `λ`-fixed form of weight 0: all form weights,
/// less one 0 for the Euler direction, less the tangent to the orbit
/// (adjoint weights minus those of the stabilizer).
pub fn normal_weights_for_stabilizer(
    lambda: &OneParamSubgroup,
    d: u32,
    stabilizer: &WeightMultiset,
) -> Result<WeightMultiset> {
    let orbit_tangent = adjoint_weights(lambda).difference(stabilizer)?;
    let mut n = form_weights(lambda, d)?;
    n.remove_n(0, 1)?;
    n.difference(&orbit_tangent)
}

/// [`normal_weights_for_stabilizer`] with a one-dimensional stabilizer.
pub fn normal_weights(lambda: &OneParamSubgroup, d: u32) -> Result<WeightMultiset> {
    normal_weights_for_stabilizer(lambda, d, &WeightMultiset::from(vec![0]))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KirwanFiber {
    pub pos: WeightMultiset,
    /// Absolute values of the negative weights.
    pub neg: WeightMultiset,
    pub zero_count: usize,
}

pub fn kirwan_fiber(lambda: &OneParamSubgroup, d: u32) -> Result<KirwanFiber> {
    let n = normal_weights(lambda, d)?;
    Ok(KirwanFiber { pos: n.positive_part(), neg: n.negative_part(), zero_count: n.count(0) })
}

/// `Σ n_i² - 1` over the multiplicities `n_i` of the distinct weights.
pub fn centralizer_dim(lambda: &OneParamSubgroup) -> usize {
    let mut mult: BTreeMap<i64, usize> = BTreeMap::new();
    for a in lambda.0 {
        *mult.entry(a).or_insert(0) += 1;
    }
    mult.values().map(|n| n * n).sum::<usize>() - 1
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundaryDim {
    pub dim_estimate: i64,
    pub orbit_rank: usize,
    /// Seed of the sample that was accepted.
    pub seed: u64,
}

const MAX_ATTEMPTS: u64 = 6;

fn random_nonzero(rng: &mut ChaCha8Rng) -> Rational {
    let num: i64 = rng.gen_range(1..=97) * if rng.gen_bool(0.5) { 1 } else { -1 };
    let den: i64 = rng.gen_range(1..=13);
    Rational::new(num.into(), den.into())
}

/// Rank of the centralizer's tangent action at a random form supported on
/// `zero`, modulo the scaling direction.
fn orbit_rank(lambda: &OneParamSubgroup, zero: &MonomialConfiguration, index: &MonomialIndex, seed: u64) -> usize {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let f: Vec<([u32; NVARS], Rational)> = zero.iter().map(|m| (m.0, random_nonzero(&mut rng))).collect();
    let a = lambda.0;
    let n = index.len();
    let pos = |e: [u32; NVARS]| index.position(&crate::lattice::ExponentVector(e)).expect("same degree");

    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for i in 0..NVARS {
        for j in 0..NVARS {
            if i == j || a[i] != a[j] {
                continue;
            }
            // x_j ∂F/∂x_i
            let mut v = vec![Rational::zero(); n];
            for (e, c) in &f {
                if e[i] == 0 {
                    continue;
                }
                let mut t = *e;
                t[i] -= 1;
                t[j] += 1;
                v[pos(t)] += c * Rational::from_integer(e[i].into());
            }
            rows.push(v);
        }
    }
    for i in 0..NVARS - 1 {
        // (E_ii - E_33) F
        let mut v = vec![Rational::zero(); n];
        for (e, c) in &f {
            v[pos(*e)] += c * Rational::from_integer((e[i] as i64 - e[3] as i64).into());
        }
        rows.push(v);
    }
    let mut scale = vec![Rational::zero(); n];
    for (e, c) in &f {
        scale[pos(*e)] = c.clone();
    }
    rows.push(scale);
    rank(&rows) - 1
}

/// `(|Z| - 1) - orbit_rank` where `Z` is the zero-weight support. Two
/// independent samples must agree; on disagreement fresh seed pairs are
/// drawn a bounded number of times.
pub fn boundary_dim(lambda: &OneParamSubgroup, d: u32, seed: u64) -> Result<BoundaryDim> {
    let zero = zero_set(lambda, d)?;
    if zero.is_empty() {
        return invalid(format!("{lambda} fixes no monomial of degree {d}"));
    }
    let index = MonomialIndex::new(d)?;
    for attempt in 0..MAX_ATTEMPTS {
        let s1 = seed.wrapping_add(2 * attempt);
        let s2 = s1.wrapping_add(1);
        let r1 = orbit_rank(lambda, &zero, &index, s1);
        let r2 = orbit_rank(lambda, &zero, &index, s2);
        if r1 == r2 {
            return Ok(BoundaryDim { dim_estimate: zero.len() as i64 - 1 - r1 as i64, orbit_rank: r1, seed: s1 });
        }
    }
    Err(Error::DegenerateSample(format!("ranks disagreed for {MAX_ATTEMPTS} seed pairs starting at {seed}")))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundaryReport {
    pub lambda: OneParamSubgroup,
    pub label: Option<usize>,
    pub zero_monomials: MonomialConfiguration,
    pub centralizer_dim: usize,
    pub normal_weights: WeightMultiset,
    pub fiber_pos: WeightMultiset,
    pub fiber_neg: WeightMultiset,
    pub fiber_zero_count: usize,
    pub dim_estimate: i64,
    pub orbit_rank: usize,
    pub seed: u64,
    pub reference_dim: Option<i64>,
    /// The estimate differs from a published dimension.
    pub dim_mismatch: bool,
}

pub fn boundary_report(lambda: &OneParamSubgroup, d: u32, seed: u64) -> Result<BoundaryReport> {
    let normal = normal_weights(lambda, d)?;
    let dim = boundary_dim(lambda, d, seed)?;
    let reference_dim = reference_boundary_dim(d, lambda);
    Ok(BoundaryReport {
        lambda: *lambda,
        label: reference_label(d, lambda),
        zero_monomials: zero_set(lambda, d)?,
        centralizer_dim: centralizer_dim(lambda),
        fiber_pos: normal.positive_part(),
        fiber_neg: normal.negative_part(),
        fiber_zero_count: normal.count(0),
        normal_weights: normal,
        dim_estimate: dim.dim_estimate,
        orbit_rank: dim.orbit_rank,
        seed: dim.seed,
        reference_dim,
        dim_mismatch: reference_dim.is_some_and(|r| r != dim.dim_estimate),
    })
}
