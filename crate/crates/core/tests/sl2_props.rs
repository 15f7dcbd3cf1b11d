use std::collections::BTreeMap;

use proptest::prelude::*;
use quintic_core::lattice::binomial;
use quintic_core::sl2::{decompose_weights, slice_report, sym_power, tensor, SL2Rep};
use quintic_core::WeightMultiset;

fn rep(max_weight: u32, max_summands: usize) -> impl Strategy<Value = SL2Rep> {
    prop::collection::vec((0..=max_weight, 1usize..=3), 0..=max_summands).prop_map(SL2Rep::from_pairs)
}

fn weights_of(w: &WeightMultiset) -> Vec<i64> {
    w.to_sorted_vec()
}

/// Pairwise sums of two weight lists.
fn convolve(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out: Vec<i64> = a.iter().flat_map(|x| b.iter().map(move |y| x + y)).collect();
    out.sort_unstable();
    out
}

/// Sums over all size-`k` multisets of positions of a weight list.
fn symmetric_weights(w: &[i64], k: usize) -> Vec<i64> {
    fn go(w: &[i64], start: usize, k: usize, acc: i64, out: &mut Vec<i64>) {
        if k == 0 {
            out.push(acc);
            return;
        }
        for i in start..w.len() {
            go(w, i, k - 1, acc + w[i], out);
        }
    }
    let mut out = Vec::new();
    go(w, 0, k, 0, &mut out);
    out.sort_unstable();
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn character_round_trip(r in rep(12, 5)) {
        prop_assert_eq!(decompose_weights(&r.character()).unwrap(), r.clone());
        prop_assert_eq!(r.character().len(), r.dimension());
        prop_assert!(r.character().is_symmetric());
    }

    #[test]
    fn dimension_is_a_homomorphism(a in rep(8, 4), b in rep(8, 4)) {
        prop_assert_eq!(a.direct_sum(&b).dimension(), a.dimension() + b.dimension());
        prop_assert_eq!(tensor(&a, &b).dimension(), a.dimension() * b.dimension());
        prop_assert_eq!(tensor(&a, &b), tensor(&b, &a));
        prop_assert_eq!(a.direct_sum(&b).difference(&b).unwrap(), a);
    }

    #[test]
    fn characters_are_multiplicative(a in rep(6, 3), b in rep(6, 3)) {
        let lhs = weights_of(&tensor(&a, &b).character());
        prop_assert_eq!(lhs, convolve(&weights_of(&a.character()), &weights_of(&b.character())));
    }

    #[test]
    fn symmetric_powers(r in rep(4, 2), k in 0usize..=4) {
        let s = sym_power(k, &r);
        let n = r.dimension() as u64;
        let expected = if n == 0 { u64::from(k == 0) } else { binomial(n + k as u64 - 1, k as u64) };
        prop_assert_eq!(s.dimension() as u64, expected);
        prop_assert_eq!(weights_of(&s.character()), symmetric_weights(&weights_of(&r.character()), k));
    }

    #[test]
    fn tensor_distributes(a in rep(5, 2), b in rep(5, 2), c in rep(5, 2)) {
        prop_assert_eq!(tensor(&a, &b.direct_sum(&c)), tensor(&a, &b).direct_sum(&tensor(&a, &c)));
    }
}

#[test]
fn clebsch_gordan() {
    for m in 0..8u32 {
        for n in 0..8u32 {
            let t = tensor(&SL2Rep::irreducible(m), &SL2Rep::irreducible(n));
            let expected: BTreeMap<u32, usize> =
                (0..=m.min(n)).map(|k| (m + n - 2 * k, 1)).collect();
            let got: BTreeMap<u32, usize> = t.summands().iter().map(|s| (s.highest_weight, s.multiplicity)).collect();
            assert_eq!(got, expected, "Sym^{m} ⊗ Sym^{n}");
        }
    }
}

#[test]
fn slice_chain() {
    let r = slice_report().unwrap();
    let q = SL2Rep::from_pairs([(10, 1), (8, 1), (6, 2), (4, 2), (2, 3), (0, 3)]);
    assert_eq!(r.quintic_forms, q);
    assert_eq!(q.dimension(), 56);
    assert_eq!(r.adjoint, SL2Rep::from_pairs([(4, 1), (2, 3), (0, 1)]));
    assert_eq!(r.adjoint.dimension(), 15);
    let n = tensor(&SL2Rep::irreducible(5), &SL2Rep::irreducible(5)).direct_sum(&SL2Rep::irreducible(6));
    assert_eq!(r.normal, n);
    assert_eq!(n.dimension(), 43);
    assert!(r.normal_matches && r.torus_check);
    assert_eq!(r.normal.to_string(), "Sym^10 + Sym^8 + 2*Sym^6 + Sym^4 + Sym^2 + Sym^0");
}

#[test]
fn decomposition_rejects_non_characters() {
    assert!(decompose_weights(&vec![2, 0].into()).is_err());
    assert!(decompose_weights(&vec![1, 1, -1].into()).is_err());
    assert!(SL2Rep::irreducible(2).difference(&SL2Rep::irreducible(4)).is_err());
}
