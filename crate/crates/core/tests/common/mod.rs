#![allow(dead_code)]

use proptest::prelude::*;
use quintic_core::{ExponentVector, MonomialConfiguration, OneParamSubgroup};

pub fn monomial(d: u32) -> impl Strategy<Value = ExponentVector> {
    (0..=d, 0..=d, 0..=d).prop_map(move |(a, b, c)| {
        let mut cuts = [a, b, c];
        cuts.sort_unstable();
        ExponentVector([cuts[0], cuts[1] - cuts[0], cuts[2] - cuts[1], d - cuts[2]])
    })
}

pub fn configuration(d: u32, max: usize) -> impl Strategy<Value = MonomialConfiguration> {
    prop::collection::btree_set(monomial(d), 1..=max)
        .prop_map(move |s| MonomialConfiguration::new(d, s).expect("homogeneous"))
}

/// Nonzero sum-zero weights with entries in `[-bound, bound]`, any order.
pub fn subgroup(bound: i64) -> impl Strategy<Value = OneParamSubgroup> {
    (-bound..=bound, -bound..=bound, -bound..=bound)
        .prop_filter("sum in range and nonzero", move |(a, b, c)| {
            let d = -(a + b + c);
            d.abs() <= bound && (*a, *b, *c, d) != (0, 0, 0, 0)
        })
        .prop_map(|(a, b, c)| OneParamSubgroup([a, b, c, -(a + b + c)]))
}

/// Every nonzero sum-zero vector with entries in `[-bound, bound]`.
pub fn all_subgroups(bound: i64) -> Vec<OneParamSubgroup> {
    let mut out = Vec::new();
    for a in -bound..=bound {
        for b in -bound..=bound {
            for c in -bound..=bound {
                let d = -(a + b + c);
                if d.abs() <= bound && (a, b, c) != (0, 0, 0) {
                    out.push(OneParamSubgroup([a, b, c, d]));
                }
            }
        }
    }
    out
}

/// Nonzero, descending, sum-zero vectors with entries in `[-bound, bound]`.
pub fn normalized_box(bound: i64) -> Vec<OneParamSubgroup> {
    all_subgroups(bound)
        .into_iter()
        .filter(|l| l.0.windows(2).all(|w| w[0] >= w[1]))
        .collect()
}
