//! Exhaustive check that every normalized `ρ` with bounded weights has
//! `M⊕(ρ)` inside the `M⊕` of some critical record.

use std::sync::atomic::{AtomicU64, Ordering};

use num_integer::Integer;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::CriticalRecord;
use crate::error::{invalid, Error, Result};
use crate::lattice::{MonomialIndex, MonomialMask, OneParamSubgroup};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanReport {
    pub degree: u32,
    pub bound: i64,
    pub strategy: String,
    pub scanned: u64,
    pub violations: Vec<OneParamSubgroup>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScanProgress {
    /// Outer slices `(a0, a1)` finished so far.
    pub done: u64,
    pub total: u64,
    pub scanned: u64,
}

/// Everything a strategy needs to run one scan.
pub struct ScanJob<'a> {
    pub index: MonomialIndex,
    pub maximal: Vec<MonomialMask>,
    pub bound: i64,
    pub progress: &'a (dyn Fn(ScanProgress) + Sync),
}

#[derive(Default)]
struct Tally {
    scanned: u64,
    violations: Vec<OneParamSubgroup>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.scanned += other.scanned;
        self.violations.extend(other.violations);
        self
    }
}

impl ScanJob<'_> {
    /// `(a0, a1)` prefixes of normalized vectors with `|a_i| ≤ bound`.
    fn slices(&self) -> Vec<(i64, i64)> {
        let b = self.bound;
        (1..=b)
            .flat_map(|a0| (-b..=a0).map(move |a1| (a0, a1)))
            .filter(|&(a0, a1)| {
                let (lo, hi) = self.a2_range(a0, a1);
                lo <= hi
            })
            .collect()
    }

    /// `a2` with `a1 ≥ a2 ≥ a3 = -(a0 + a1 + a2) ≥ -bound`.
    fn a2_range(&self, a0: i64, a1: i64) -> (i64, i64) {
        let lo = Integer::div_ceil(&-(a0 + a1), &2).max(-self.bound);
        let hi = a1.min(self.bound - a0 - a1);
        (lo, hi)
    }

    /// Scans every `(a2, a3)` completing the prefix `(a0, a1)`.
    fn scan_slice(&self, a0: i64, a1: i64, mask: &mut MonomialMask, tally: &mut Tally) {
        let (lo, hi) = self.a2_range(a0, a1);
        for a2 in lo..=hi {
            let a3 = -(a0 + a1 + a2);
            if a0.gcd(&a1).gcd(&a2).gcd(&a3) != 1 {
                continue;
            }
            let rho = OneParamSubgroup([a0, a1, a2, a3]);
            tally.scanned += 1;
            self.index.fill_nonneg_mask(&rho, mask);
            if !self.maximal.iter().any(|m| mask.is_subset(m)) {
                tally.violations.push(rho);
            }
        }
    }

    fn fresh_mask(&self) -> MonomialMask {
        MonomialMask::zeros(self.index.len())
    }
}

pub trait ScanStrategy: Send + Sync {
    fn name(&self) -> &'static str;
    fn description(&self) -> &'static str;
    fn run(&self, job: &ScanJob<'_>) -> (u64, Vec<OneParamSubgroup>);
}

pub struct Sequential;

impl ScanStrategy for Sequential {
    fn name(&self) -> &'static str {
        "sequential"
    }
    fn description(&self) -> &'static str {
        "single thread, slices in order"
    }
    fn run(&self, job: &ScanJob<'_>) -> (u64, Vec<OneParamSubgroup>) {
        let slices = job.slices();
        let total = slices.len() as u64;
        let mut mask = job.fresh_mask();
        let mut tally = Tally::default();
        for (i, &(a0, a1)) in slices.iter().enumerate() {
            job.scan_slice(a0, a1, &mut mask, &mut tally);
            (job.progress)(ScanProgress { done: i as u64 + 1, total, scanned: tally.scanned });
        }
        (tally.scanned, tally.violations)
    }
}

/// Slices distributed over the ambient rayon pool.
pub struct Parallel;

impl ScanStrategy for Parallel {
    fn name(&self) -> &'static str {
        "parallel"
    }
    fn description(&self) -> &'static str {
        "slices distributed over the rayon thread pool"
    }
    fn run(&self, job: &ScanJob<'_>) -> (u64, Vec<OneParamSubgroup>) {
        let slices = job.slices();
        let total = slices.len() as u64;
        let done = AtomicU64::new(0);
        let scanned = AtomicU64::new(0);
        let tally = slices
            .par_iter()
            .fold(
                || (job.fresh_mask(), Tally::default()),
                |(mut mask, mut tally), &(a0, a1)| {
                    let before = tally.scanned;
                    job.scan_slice(a0, a1, &mut mask, &mut tally);
                    let s = scanned.fetch_add(tally.scanned - before, Ordering::Relaxed) + tally.scanned - before;
                    let d = done.fetch_add(1, Ordering::Relaxed) + 1;
                    (job.progress)(ScanProgress { done: d, total, scanned: s });
                    (mask, tally)
                },
            )
            .map(|(_, t)| t)
            .reduce(Tally::default, Tally::merge);
        (tally.scanned, tally.violations)
    }
}

pub const DEFAULT_STRATEGY: &str = "parallel";

pub struct StrategyRegistry {
    strategies: Vec<Box<dyn ScanStrategy>>,
}

impl StrategyRegistry {
    pub fn empty() -> Self {
        StrategyRegistry { strategies: Vec::new() }
    }

    pub fn register(&mut self, s: Box<dyn ScanStrategy>) {
        self.strategies.retain(|x| x.name() != s.name());
        self.strategies.push(s);
    }

    pub fn get(&self, name: &str) -> Result<&dyn ScanStrategy> {
        self.strategies.iter().find(|s| s.name() == name).map(|s| s.as_ref()).ok_or_else(|| {
            Error::UnknownStrategy { kind: "scan strategy", name: name.to_string(), available: self.names().join(", ") }
        })
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.strategies.iter().map(|s| s.name()).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn ScanStrategy> + '_ {
        self.strategies.iter().map(|s| s.as_ref())
    }
}

impl Default for StrategyRegistry {
    fn default() -> Self {
        let mut r = StrategyRegistry::empty();
        r.register(Box::new(Parallel));
        r.register(Box::new(Sequential));
        r
    }
}

/// Scans all normalized `ρ` with `|a_i| ≤ bound` against `critical`.
/// Violations are returned sorted.
pub fn verify_completeness(
    critical: &[CriticalRecord],
    bound: i64,
    strategy: &dyn ScanStrategy,
    progress: &(dyn Fn(ScanProgress) + Sync),
) -> Result<ScanReport> {
    if bound < 1 {
        return invalid("bound must be at least 1");
    }
    let Some(first) = critical.first() else {
        return invalid("empty critical list");
    };
    let index = MonomialIndex::new(first.degree())?;
    let maximal = critical.iter().map(|r| index.mask_of(&r.nonneg)).collect::<Result<Vec<_>>>()?;
    let job = ScanJob { index, maximal, bound, progress };
    let (scanned, mut violations) = strategy.run(&job);
    violations.sort();
    Ok(ScanReport { degree: first.degree(), bound, strategy: strategy.name().to_string(), scanned, violations })
}
