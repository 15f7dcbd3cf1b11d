//! Exact integer primitives: monomials of degree `d` in four variables,
//! diagonal one-parameter subgroups, their pairing, the dominance order on
//! monomials and the weight level sets `M⊕(λ)` / `M0(λ)`.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};

pub type Rational = BigRational;

/// Number of homogeneous coordinates on P³.
pub const NVARS: usize = 4;

/// Exponents `(i0, i1, i2, i3)` of a monomial `x0^i0 x1^i1 x2^i2 x3^i3`.
///
/// Ordered lexicographically *descending*, so `x0^d` is the smallest element
/// and iteration over a `BTreeSet` starts at the largest monomial.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ExponentVector(pub [u32; NVARS]);

impl ExponentVector {
    pub const fn new(exponents: [u32; NVARS]) -> Self {
        ExponentVector(exponents)
    }

    pub fn exponents(&self) -> [u32; NVARS] {
        self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Relabels variables: entry `i` of the result is entry `perm[i]` of `self`.
    pub fn permuted(&self, perm: &Permutation) -> Self {
        let p = perm.0;
        ExponentVector([self.0[p[0]], self.0[p[1]], self.0[p[2]], self.0[p[3]]])
    }

    pub fn as_rational(&self) -> [Rational; NVARS] {
        self.0.map(|e| Rational::from_integer(e.into()))
    }
}

impl Ord for ExponentVector {
    fn cmp(&self, other: &Self) -> Ordering {
        other.0.cmp(&self.0)
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{i}")?;
            } else {
                write!(f, "x{i}^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// A relabelling of the four coordinates.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct Permutation(pub [usize; NVARS]);

impl Permutation {
    pub const IDENTITY: Permutation = Permutation([0, 1, 2, 3]);

    pub fn new(images: [usize; NVARS]) -> Result<Self> {
        let mut seen = [false; NVARS];
        for &i in &images {
            if i >= NVARS || seen[i] {
                return invalid(format!("{images:?} is not a permutation of 0..4"));
            }
            seen[i] = true;
        }
        Ok(Permutation(images))
    }

    /// All 24 permutations in lexicographic order, identity first.
    pub fn all() -> Vec<Permutation> {
        let mut out = Vec::with_capacity(24);
        for a in 0..NVARS {
            for b in 0..NVARS {
                for c in 0..NVARS {
                    for d in 0..NVARS {
                        let p = [a, b, c, d];
                        let mut seen = [false; NVARS];
                        p.iter().for_each(|&i| seen[i] = true);
                        if seen.iter().all(|&s| s) {
                            out.push(Permutation(p));
                        }
                    }
                }
            }
        }
        out
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = [0; NVARS];
        for (i, &p) in self.0.iter().enumerate() {
            inv[p] = i;
        }
        Permutation(inv)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.0;
        write!(f, "[{} {} {} {}]", p[0], p[1], p[2], p[3])
    }
}

/// Diagonal one-parameter subgroup `diag(t^a0, .., t^a3)` of SL4, `Σ a_i = 0`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct OneParamSubgroup(pub [i64; NVARS]);

impl OneParamSubgroup {
    pub fn new(weights: [i64; NVARS]) -> Result<Self> {
        if weights.iter().sum::<i64>() != 0 {
            return invalid(format!("weights {weights:?} do not sum to zero"));
        }
        Ok(OneParamSubgroup(weights))
    }

    pub fn weights(&self) -> [i64; NVARS] {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }

    /// Sorted descending, primitive and nonzero.
    pub fn is_normalized(&self) -> bool {
        !self.is_zero() && self.0.windows(2).all(|w| w[0] >= w[1]) && self.content() == 1
    }

    /// gcd of the absolute values of the weights.
    pub fn content(&self) -> i64 {
        self.0.iter().fold(0i64, |g, &a| g.gcd(&a))
    }

    /// Divides by the content; the zero subgroup is returned unchanged.
    pub fn primitive(&self) -> OneParamSubgroup {
        let g = self.content();
        if g == 0 {
            return *self;
        }
        OneParamSubgroup(self.0.map(|a| a / g))
    }

    /// Sort descending and make primitive. The zero subgroup has no normal form.
    pub fn normalized(&self) -> Result<OneParamSubgroup> {
        if self.is_zero() {
            return invalid("the trivial one-parameter subgroup has no normal form");
        }
        let mut w = self.primitive().0;
        w.sort_unstable_by(|a, b| b.cmp(a));
        Ok(OneParamSubgroup(w))
    }

    /// A permutation `σ` with `self.normalized() == self.primitive()` read through
    /// `σ`: entry `i` of the normal form is entry `σ[i]` of `self`. Ties are
    /// broken by index, so the result is deterministic.
    pub fn sorting_permutation(&self) -> Permutation {
        let mut idx = [0, 1, 2, 3];
        idx.sort_by(|&i, &j| self.0[j].cmp(&self.0[i]).then(i.cmp(&j)));
        Permutation(idx)
    }

    pub fn neg(&self) -> OneParamSubgroup {
        OneParamSubgroup(self.0.map(|a| -a))
    }

    /// The subgroup acting on relabelled coordinates: if `m' = m.permuted(perm)`
    /// then `self.pairing(m') == self.in_original_coordinates(perm).pairing(m)`.
    pub fn in_original_coordinates(&self, perm: &Permutation) -> OneParamSubgroup {
        let mut w = [0; NVARS];
        for (i, &p) in perm.0.iter().enumerate() {
            w[p] = self.0[i];
        }
        OneParamSubgroup(w)
    }

    pub fn norm_squared(&self) -> i64 {
        self.0.iter().map(|a| a * a).sum()
    }

    pub fn pairing(&self, m: &ExponentVector) -> i64 {
        weight_pairing(self, m)
    }

    pub fn pairing_rational(&self, p: &RationalPoint4) -> Rational {
        self.0
            .iter()
            .zip(p.0.iter())
            .fold(Rational::zero(), |acc, (&a, x)| acc + x * Rational::from_integer(a.into()))
    }
}

impl fmt::Debug for OneParamSubgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "λ{:?}", self.0)
    }
}

impl fmt::Display for OneParamSubgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = self.0;
        write!(f, "({}, {}, {}, {})", w[0], w[1], w[2], w[3])
    }
}

/// A point of `Q⁴`, used for the centroid of the monomial simplex and for
/// barycentric reconstructions.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RationalPoint4(pub [Rational; NVARS]);

impl RationalPoint4 {
    pub fn coordinate_sum(&self) -> Rational {
        self.0.iter().fold(Rational::zero(), |acc, x| acc + x)
    }

    pub fn from_exponents(m: &ExponentVector) -> Self {
        RationalPoint4(m.as_rational())
    }
}

/// Degree plus support: the set of monomials with nonzero coefficient.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct MonomialConfiguration {
    degree: u32,
    support: BTreeSet<ExponentVector>,
}

impl MonomialConfiguration {
    pub fn new(degree: u32, monomials: impl IntoIterator<Item = ExponentVector>) -> Result<Self> {
        let mut support = BTreeSet::new();
        for m in monomials {
            if m.degree() != degree {
                return invalid(format!("monomial {m:?} has degree {} not {degree}", m.degree()));
            }
            if !support.insert(m) {
                return invalid(format!("duplicate monomial {m:?}"));
            }
        }
        Ok(MonomialConfiguration { degree, support })
    }

    pub fn empty(degree: u32) -> Self {
        MonomialConfiguration { degree, support: BTreeSet::new() }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.support.len()
    }

    pub fn is_empty(&self) -> bool {
        self.support.is_empty()
    }

    /// Monomials in lexicographic-descending order.
    pub fn iter(&self) -> impl Iterator<Item = &ExponentVector> + '_ {
        self.support.iter()
    }

    pub fn contains(&self, m: &ExponentVector) -> bool {
        self.support.contains(m)
    }

    pub fn is_subset(&self, other: &MonomialConfiguration) -> bool {
        self.degree == other.degree && self.support.is_subset(&other.support)
    }

    pub fn permuted(&self, perm: &Permutation) -> MonomialConfiguration {
        MonomialConfiguration {
            degree: self.degree,
            support: self.support.iter().map(|m| m.permuted(perm)).collect(),
        }
    }

    pub fn union(&self, other: &MonomialConfiguration) -> Result<MonomialConfiguration> {
        if self.degree != other.degree {
            return invalid(format!("degree mismatch {} vs {}", self.degree, other.degree));
        }
        Ok(MonomialConfiguration {
            degree: self.degree,
            support: self.support.union(&other.support).copied().collect(),
        })
    }

    pub fn to_vec(&self) -> Vec<ExponentVector> {
        self.support.iter().copied().collect()
    }
}

/// All `C(d+3, 3)` monomials of degree `d`, lexicographic descending.
pub fn enumerate_monomials(d: u32) -> Result<Vec<ExponentVector>> {
    if d == 0 {
        return invalid("degree must be positive");
    }
    let mut out = Vec::with_capacity(binomial(d as u64 + 3, 3) as usize);
    for i0 in (0..=d).rev() {
        for i1 in (0..=d - i0).rev() {
            for i2 in (0..=d - i0 - i1).rev() {
                out.push(ExponentVector([i0, i1, i2, d - i0 - i1 - i2]));
            }
        }
    }
    Ok(out)
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

pub fn weight_pairing(lambda: &OneParamSubgroup, m: &ExponentVector) -> i64 {
    lambda.0.iter().zip(m.0.iter()).map(|(&a, &i)| a * i as i64).sum()
}

/// The barycenter `(d/4, d/4, d/4, d/4)` of the degree-`d` simplex.
pub fn centroid(d: u32) -> Result<RationalPoint4> {
    if d == 0 {
        return invalid("degree must be positive");
    }
    let c = Rational::new((d as i64).into(), 4.into());
    Ok(RationalPoint4([c.clone(), c.clone(), c.clone(), c]))
}

/// `m ≥ m2` in the order induced by all normalized one-parameter subgroups.
///
/// The cone of normalized weights is spanned by `(3,-1,-1,-1)`, `(1,1,-1,-1)`
/// and `(1,1,1,-3)`; nonnegativity on these rays is equivalent to the three
/// prefix sums of `m - m2` being nonnegative.
pub fn monomial_dominates(m: &ExponentVector, m2: &ExponentVector) -> Result<bool> {
    if m.degree() != m2.degree() {
        return invalid(format!(
            "cannot compare monomials of degrees {} and {}",
            m.degree(),
            m2.degree()
        ));
    }
    let mut prefix = 0i64;
    for j in 0..NVARS - 1 {
        prefix += m.0[j] as i64 - m2.0[j] as i64;
        if prefix < 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `M⊕(λ)`: degree-`d` monomials of nonnegative weight.
pub fn nonneg_set(lambda: &OneParamSubgroup, d: u32) -> Result<MonomialConfiguration> {
    level_set(d, |m| weight_pairing(lambda, m) >= 0)
}

/// `M0(λ)`: degree-`d` monomials fixed by `λ`.
pub fn zero_set(lambda: &OneParamSubgroup, d: u32) -> Result<MonomialConfiguration> {
    level_set(d, |m| weight_pairing(lambda, m) == 0)
}

fn level_set(d: u32, keep: impl Fn(&ExponentVector) -> bool) -> Result<MonomialConfiguration> {
    let support = enumerate_monomials(d)?.into_iter().filter(|m| keep(m)).collect();
    Ok(MonomialConfiguration { degree: d, support })
}

/// Fixed-width bitset over the monomials of one degree.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MonomialMask {
    words: Vec<u64>,
}

impl MonomialMask {
    pub fn zeros(len: usize) -> Self {
        MonomialMask { words: vec![0; len.div_ceil(64)] }
    }

    pub fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn clear(&mut self) {
        self.words.iter_mut().for_each(|w| *w = 0);
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_subset(&self, other: &MonomialMask) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_strict_subset(&self, other: &MonomialMask) -> bool {
        self.is_subset(other) && self != other
    }
}

/// Positions of the degree-`d` monomials in [`enumerate_monomials`] order.
#[derive(Clone, Debug)]
pub struct MonomialIndex {
    degree: u32,
    monomials: Vec<ExponentVector>,
    positions: HashMap<ExponentVector, usize>,
}

impl MonomialIndex {
    pub fn new(d: u32) -> Result<Self> {
        let monomials = enumerate_monomials(d)?;
        let positions = monomials.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        Ok(MonomialIndex { degree: d, monomials, positions })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn monomials(&self) -> &[ExponentVector] {
        &self.monomials
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn position(&self, m: &ExponentVector) -> Option<usize> {
        self.positions.get(m).copied()
    }

    pub fn nonneg_mask(&self, lambda: &OneParamSubgroup) -> MonomialMask {
        let mut mask = MonomialMask::zeros(self.len());
        self.fill_nonneg_mask(lambda, &mut mask);
        mask
    }

    /// Overwrites `mask` with `M⊕(λ)`; avoids allocation in scans.
    pub fn fill_nonneg_mask(&self, lambda: &OneParamSubgroup, mask: &mut MonomialMask) {
        mask.clear();
        for (i, m) in self.monomials.iter().enumerate() {
            if weight_pairing(lambda, m) >= 0 {
                mask.set(i);
            }
        }
    }

    pub fn mask_of(&self, cfg: &MonomialConfiguration) -> Result<MonomialMask> {
        if cfg.degree() != self.degree {
            return invalid(format!("configuration of degree {} in index of degree {}", cfg.degree(), self.degree));
        }
        let mut mask = MonomialMask::zeros(self.len());
        for m in cfg.iter() {
            mask.set(self.positions[m]);
        }
        Ok(mask)
    }

    pub fn configuration(&self, mask: &MonomialMask) -> MonomialConfiguration {
        MonomialConfiguration {
            degree: self.degree,
            support: (0..self.len()).filter(|&i| mask.get(i)).map(|i| self.monomials[i]).collect(),
        }
    }
}

/// Primitive integer vector on the same ray as a nonzero rational vector.
pub fn primitive_direction(v: &[Rational; NVARS]) -> Option<[i64; NVARS]> {
    use num_bigint::BigInt;
    use num_traits::ToPrimitive;
    if v.iter().all(|x| x.is_zero()) {
        return None;
    }
    let lcm = v.iter().fold(BigInt::from(1), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * Rational::from_integer(lcm.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(&x.abs()));
    let mut out = [0i64; NVARS];
    for (o, x) in out.iter_mut().zip(ints) {
        *o = (x / &g).to_i64()?;
    }
    Some(out)
}
