//! Finite-dimensional representations of SL2 as multisets of irreducibles.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::lattice::OneParamSubgroup;
use crate::luna::normal_weights_for_stabilizer;
use crate::weights::WeightMultiset;

/// `⊕ Sym^n(V)^{m_n}` with `V` the standard two-dimensional representation.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct SL2Rep {
    mult: BTreeMap<u32, usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summand {
    pub highest_weight: u32,
    pub multiplicity: usize,
}

impl SL2Rep {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `Sym^n(V)`, of dimension `n + 1`.
    pub fn irreducible(n: u32) -> Self {
        Self::from_pairs([(n, 1)])
    }

    pub fn trivial() -> Self {
        Self::irreducible(0)
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (u32, usize)>) -> Self {
        let mut r = SL2Rep::zero();
        for (n, m) in pairs {
            r.add_irreducible(n, m);
        }
        r
    }

    pub fn add_irreducible(&mut self, n: u32, m: usize) {
        if m > 0 {
            *self.mult.entry(n).or_insert(0) += m;
        }
    }

    pub fn multiplicity(&self, n: u32) -> usize {
        self.mult.get(&n).copied().unwrap_or(0)
    }

    /// `(highest weight, multiplicity)` in decreasing highest weight.
    pub fn summands(&self) -> Vec<Summand> {
        self.mult.iter().rev().map(|(&n, &m)| Summand { highest_weight: n, multiplicity: m }).collect()
    }

    pub fn dimension(&self) -> usize {
        self.mult.iter().map(|(&n, &m)| (n as usize + 1) * m).sum()
    }

    pub fn direct_sum(&self, other: &SL2Rep) -> SL2Rep {
        let mut out = self.clone();
        for (&n, &m) in &other.mult {
            out.add_irreducible(n, m);
        }
        out
    }

    /// Removes the summands of `other`; each must be present.
    pub fn difference(&self, other: &SL2Rep) -> Result<SL2Rep> {
        let mut out = self.clone();
        for (&n, &m) in &other.mult {
            let have = out.multiplicity(n);
            if have < m {
                return Err(Error::Inconsistency(format!("cannot remove {m} copies of Sym^{n}: only {have} present")));
            }
            if have == m {
                out.mult.remove(&n);
            } else {
                out.mult.insert(n, have - m);
            }
        }
        Ok(out)
    }

    /// Weights of the diagonal torus: `n, n-2, .., -n` per summand.
    pub fn character(&self) -> WeightMultiset {
        let mut w = WeightMultiset::new();
        for (&n, &m) in &self.mult {
            let n = n as i64;
            for k in 0..=n {
                w.insert_n(n - 2 * k, m);
            }
        }
        w
    }
}

/// Clebsch–Gordan: `Sym^a ⊗ Sym^b = ⊕_{k=0}^{min(a,b)} Sym^{a+b-2k}`.
pub fn tensor(a: &SL2Rep, b: &SL2Rep) -> SL2Rep {
    let mut out = SL2Rep::zero();
    for (&p, &mp) in &a.mult {
        for (&q, &mq) in &b.mult {
            for k in 0..=p.min(q) {
                out.add_irreducible(p + q - 2 * k, mp * mq);
            }
        }
    }
    out
}

/// `Sym^k(R)`: the weights are the sums over `k`-element multisubsets of the
/// weights of `R`.
pub fn sym_power(k: usize, r: &SL2Rep) -> SL2Rep {
    let weights = r.character().to_sorted_vec();
    // ways[j][s]: multisubsets of size j with weight sum s from the weights seen so far.
    let mut ways: Vec<BTreeMap<i64, usize>> = vec![BTreeMap::new(); k + 1];
    ways[0].insert(0, 1);
    for &w in &weights {
        for j in 1..=k {
            let prev = ways[j - 1].clone();
            for (s, c) in prev {
                *ways[j].entry(s + w).or_insert(0) += c;
            }
        }
    }
    let character: WeightMultiset = ways[k].iter().map(|(&s, &c)| (s, c)).collect();
    decompose_weights(&character).expect("symmetric powers have SL2 characters")
}

/// Inverse of [`SL2Rep::character`], peeling strings from the top weight.
pub fn decompose_weights(w: &WeightMultiset) -> Result<SL2Rep> {
    let mut rest = w.clone();
    let mut out = SL2Rep::zero();
    while let Some(top) = rest.max() {
        if top < 0 {
            return invalid(format!("weight {top} has no partner {}", -top));
        }
        let m = rest.count(top);
        let mut k = top;
        while k >= -top {
            if rest.count(k) < m {
                return invalid(format!("weight {k} missing from the string of highest weight {top}"));
            }
            rest.remove_n(k, m)?;
            k -= 2;
        }
        out.add_irreducible(top as u32, m);
    }
    Ok(out)
}

impl fmt::Display for SL2Rep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mult.is_empty() {
            return f.write_str("0");
        }
        for (i, s) in self.summands().iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if s.multiplicity > 1 {
                write!(f, "{}*", s.multiplicity)?;
            }
            write!(f, "Sym^{}", s.highest_weight)?;
        }
        Ok(())
    }
}

impl fmt::Debug for SL2Rep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for SL2Rep {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.summands().serialize(s)
    }
}

impl<'de> Deserialize<'de> for SL2Rep {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<Summand>::deserialize(d)?;
        Ok(SL2Rep::from_pairs(v.into_iter().map(|s| (s.highest_weight, s.multiplicity))))
    }
}

/// Normal space at the closed orbit of `2Q + H`, whose stabilizer is an SL2
/// acting on `H⁰(P³, O(1)) = Sym² ⊕ Sym⁰`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SliceReport {
    pub linear_forms: SL2Rep,
    pub quintic_forms: SL2Rep,
    pub adjoint: SL2Rep,
    pub stabilizer: SL2Rep,
    pub orbit_tangent: SL2Rep,
    pub normal: SL2Rep,
    pub expected_normal: SL2Rep,
    pub normal_matches: bool,
    /// The normal character agrees with the torus computation for
    /// `λ = (2,0,0,-2)` with stabilizer weights `{2,0,-2}`.
    pub torus_check: bool,
}

pub fn slice_report() -> Result<SliceReport> {
    let linear_forms = SL2Rep::irreducible(2).direct_sum(&SL2Rep::trivial());
    let quintic_forms = sym_power(5, &linear_forms);
    let adjoint = tensor(&linear_forms, &linear_forms).difference(&SL2Rep::trivial())?;
    let stabilizer = SL2Rep::irreducible(2);
    let orbit_tangent = adjoint.difference(&stabilizer)?;
    let normal = quintic_forms.difference(&SL2Rep::trivial())?.difference(&orbit_tangent)?;
    let expected_normal = tensor(&SL2Rep::irreducible(5), &SL2Rep::irreducible(5)).direct_sum(&SL2Rep::irreducible(6));

    let torus = normal_weights_for_stabilizer(&OneParamSubgroup([2, 0, 0, -2]), 5, &stabilizer.character())?;
    Ok(SliceReport {
        normal_matches: normal == expected_normal,
        torus_check: torus == normal.character(),
        linear_forms,
        quintic_forms,
        adjoint,
        stabilizer,
        orbit_tangent,
        normal,
        expected_normal,
    })
}
