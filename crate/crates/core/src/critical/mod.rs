//! Critical one-parameter subgroups: those whose `M⊕(λ)` is maximal among
//! all non-stable monomial configurations of a given degree.

pub mod rules;
pub mod scan;

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::lattice::{
    centroid, monomial_dominates, nonneg_set, zero_set, ExponentVector, MonomialConfiguration, MonomialIndex,
    MonomialMask, OneParamSubgroup,
};
use crate::reference::reference_label;
use crate::stability::{hull_membership, HullVerdict};

pub use rules::{RepresentativeRule, RuleRegistry, DEFAULT_RULE};
pub use scan::{verify_completeness, ScanProgress, ScanReport, ScanStrategy, StrategyRegistry};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CriticalKind {
    /// The centroid lies in the hull of the zero-weight monomials: the
    /// `λ`-fixed configurations contain closed strictly semistable orbits.
    MinimalOrbitBoundary,
    /// Every configuration in `M⊕(λ)` is unstable.
    UnstableCone,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalRecord {
    pub lambda: OneParamSubgroup,
    pub nonneg: MonomialConfiguration,
    pub zero: MonomialConfiguration,
    pub kind: CriticalKind,
    /// Every normalized candidate with the same `M⊕`, ascending.
    pub tie_class: Vec<OneParamSubgroup>,
}

impl CriticalRecord {
    pub fn degree(&self) -> u32 {
        self.nonneg.degree()
    }

    pub fn reference_label(&self) -> Option<usize> {
        reference_label(self.degree(), &self.lambda)
    }
}

/// The primitive `λ` orthogonal to `m1`, `m2` and `(1,1,1,1)`, with its first
/// nonzero weight positive. `None` when the three rows are dependent.
pub fn candidate_from_pair(d: u32, m1: &ExponentVector, m2: &ExponentVector) -> Result<Option<OneParamSubgroup>> {
    if m1.degree() != d || m2.degree() != d {
        return invalid(format!("monomials {m1:?}, {m2:?} are not both of degree {d}"));
    }
    let r1 = m1.0.map(i64::from);
    let r2 = m2.0.map(i64::from);
    let minor = |skip: usize| -> i64 {
        let cols: Vec<usize> = (0..4).filter(|&c| c != skip).collect();
        let (a, b, c) = (cols[0], cols[1], cols[2]);
        r1[a] * (r2[b] - r2[c]) - r1[b] * (r2[a] - r2[c]) + r1[c] * (r2[a] - r2[b])
    };
    let mut w = [minor(0), -minor(1), minor(2), -minor(3)];
    if w.iter().all(|&x| x == 0) {
        return Ok(None);
    }
    if w.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0) {
        w = w.map(|x| -x);
    }
    Ok(Some(OneParamSubgroup(w).primitive()))
}

/// Normalized forms of `±` every pair candidate over `monomials`.
pub fn pair_candidates(d: u32, monomials: &[ExponentVector]) -> Result<BTreeSet<OneParamSubgroup>> {
    let mut out = BTreeSet::new();
    for (i, m1) in monomials.iter().enumerate() {
        for m2 in &monomials[i + 1..] {
            if let Some(l) = candidate_from_pair(d, m1, m2)? {
                out.insert(l.normalized()?);
                out.insert(l.neg().normalized()?);
            }
        }
    }
    Ok(out)
}

pub fn classify_critical(rec: &CriticalRecord) -> Result<CriticalKind> {
    classify_lambda(&rec.lambda, rec.degree())
}

fn classify_lambda(lambda: &OneParamSubgroup, d: u32) -> Result<CriticalKind> {
    let zero = zero_set(lambda, d)?;
    if zero.is_empty() {
        return Ok(CriticalKind::UnstableCone);
    }
    Ok(match hull_membership(&centroid(d)?, &zero)? {
        HullVerdict::Outside { .. } => CriticalKind::UnstableCone,
        _ => CriticalKind::MinimalOrbitBoundary,
    })
}

/// Critical records for degree `d`, using the default tie rule.
pub fn enumerate_critical(d: u32) -> Result<Vec<CriticalRecord>> {
    let registry = RuleRegistry::default();
    enumerate_critical_with(d, registry.get(DEFAULT_RULE)?)
}

pub fn enumerate_critical_with(d: u32, rule: &dyn RepresentativeRule) -> Result<Vec<CriticalRecord>> {
    if d < 2 {
        return invalid("degree must be at least 2");
    }
    let index = MonomialIndex::new(d)?;
    critical_from_generators(&index, index.monomials(), rule)
}

/// Runs the maximal-set computation with pair candidates drawn from
/// `generators` only; `M⊕` is still taken over all degree-`d` monomials.
pub fn critical_from_generators(
    index: &MonomialIndex,
    generators: &[ExponentVector],
    rule: &dyn RepresentativeRule,
) -> Result<Vec<CriticalRecord>> {
    let d = index.degree();
    let candidates = pair_candidates(d, generators)?;

    let mut classes: HashMap<MonomialMask, Vec<OneParamSubgroup>> = HashMap::new();
    for l in &candidates {
        classes.entry(index.nonneg_mask(l)).or_default().push(*l);
    }
    let masks: Vec<&MonomialMask> = classes.keys().collect();
    let maximal: Vec<&MonomialMask> =
        masks.iter().copied().filter(|m| !masks.iter().any(|o| m.is_strict_subset(o))).collect();

    let mut records = Vec::with_capacity(maximal.len());
    for mask in maximal {
        let mut class = classes[mask].clone();
        class.sort();
        let lambda = rule.choose(d, &class);
        records.push(CriticalRecord {
            lambda,
            nonneg: nonneg_set(&lambda, d)?,
            zero: zero_set(&lambda, d)?,
            kind: classify_lambda(&lambda, d)?,
            tie_class: class,
        });
    }
    sort_records(&mut records);
    Ok(records)
}

/// Classes carrying a reference label come first in label order; the rest
/// follow by kind and then by weight vector.
fn sort_records(records: &mut [CriticalRecord]) {
    let class_label = |r: &CriticalRecord| r.tie_class.iter().filter_map(|l| reference_label(r.degree(), l)).min();
    records.sort_by_key(|r| (class_label(r).unwrap_or(usize::MAX), r.kind, r.lambda));
}

/// Minimal elements of `cfg` under [`monomial_dominates`].
pub fn minimal_monomials(cfg: &MonomialConfiguration) -> Vec<ExponentVector> {
    let ms = cfg.to_vec();
    ms.iter()
        .filter(|m| !ms.iter().any(|o| o != *m && monomial_dominates(m, o).unwrap_or(false)))
        .copied()
        .collect()
}

/// Union of the minimal monomials of every record, lex-descending.
pub fn minimal_generators(records: &[CriticalRecord]) -> Vec<ExponentVector> {
    let set: BTreeSet<ExponentVector> = records.iter().flat_map(|r| minimal_monomials(&r.nonneg)).collect();
    set.into_iter().collect()
}

/// Number of records of each kind.
pub fn kind_counts(records: &[CriticalRecord]) -> BTreeMap<CriticalKind, usize> {
    let mut out = BTreeMap::new();
    for r in records {
        *out.entry(r.kind).or_insert(0) += 1;
    }
    out
}
