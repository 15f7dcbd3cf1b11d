use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite multiset of integer weights.
#[derive(Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "Vec<i64>", from = "Vec<i64>")]
pub struct WeightMultiset {
    counts: BTreeMap<i64, usize>,
    total: usize,
}

impl WeightMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, w: i64) {
        self.insert_n(w, 1);
    }

    pub fn insert_n(&mut self, w: i64, n: usize) {
        if n == 0 {
            return;
        }
        *self.counts.entry(w).or_insert(0) += n;
        self.total += n;
    }

    pub fn len(&self) -> usize {
        self.total
    }

    pub fn is_empty(&self) -> bool {
        self.total == 0
    }

    pub fn count(&self, w: i64) -> usize {
        self.counts.get(&w).copied().unwrap_or(0)
    }

    /// `(weight, multiplicity)` in increasing weight order.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (i64, usize)> + '_ {
        self.counts.iter().map(|(&w, &n)| (w, n))
    }

    /// Flattened, ascending.
    pub fn to_sorted_vec(&self) -> Vec<i64> {
        self.iter().flat_map(|(w, n)| std::iter::repeat_n(w, n)).collect()
    }

    /// Flattened, descending.
    pub fn to_descending_vec(&self) -> Vec<i64> {
        let mut v = self.to_sorted_vec();
        v.reverse();
        v
    }

    pub fn max(&self) -> Option<i64> {
        self.counts.keys().next_back().copied()
    }

    pub fn negated(&self) -> WeightMultiset {
        self.iter().map(|(w, n)| (-w, n)).collect()
    }

    pub fn is_symmetric(&self) -> bool {
        self.iter().all(|(w, n)| self.count(-w) == n)
    }

    pub fn union(&self, other: &WeightMultiset) -> WeightMultiset {
        let mut out = self.clone();
        for (w, n) in other.iter() {
            out.insert_n(w, n);
        }
        out
    }

    /// Removes `n` copies of `w`; fails without modifying `self` if fewer are present.
    pub fn remove_n(&mut self, w: i64, n: usize) -> Result<()> {
        let have = self.count(w);
        if have < n {
            return Err(Error::Inconsistency(format!(
                "cannot remove {n} copies of weight {w}: only {have} present"
            )));
        }
        if have == n {
            self.counts.remove(&w);
        } else {
            self.counts.insert(w, have - n);
        }
        self.total -= n;
        Ok(())
    }

    /// Multiset difference; every element of `other` must be present.
    pub fn difference(&self, other: &WeightMultiset) -> Result<WeightMultiset> {
        let mut out = self.clone();
        for (w, n) in other.iter() {
            out.remove_n(w, n)?;
        }
        Ok(out)
    }

    /// Strictly positive weights.
    pub fn positive_part(&self) -> WeightMultiset {
        self.iter().filter(|&(w, _)| w > 0).collect()
    }

    /// Absolute values of the strictly negative weights.
    pub fn negative_part(&self) -> WeightMultiset {
        self.iter().filter(|&(w, _)| w < 0).map(|(w, n)| (-w, n)).collect()
    }
}

impl FromIterator<(i64, usize)> for WeightMultiset {
    fn from_iter<I: IntoIterator<Item = (i64, usize)>>(iter: I) -> Self {
        let mut out = WeightMultiset::new();
        for (w, n) in iter {
            out.insert_n(w, n);
        }
        out
    }
}

impl FromIterator<i64> for WeightMultiset {
    fn from_iter<I: IntoIterator<Item = i64>>(iter: I) -> Self {
        iter.into_iter().map(|w| (w, 1)).collect()
    }
}

impl From<Vec<i64>> for WeightMultiset {
    fn from(v: Vec<i64>) -> Self {
        v.into_iter().collect()
    }
}

impl From<WeightMultiset> for Vec<i64> {
    fn from(w: WeightMultiset) -> Self {
        w.to_descending_vec()
    }
}

impl fmt::Debug for WeightMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Compact form `{10, 9, 7^2, 1^2}`, descending, exponent = multiplicity.
impl fmt::Display for WeightMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (w, n)) in self.iter().rev().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            if n == 1 {
                write!(f, "{w}")?;
            } else {
                write!(f, "{w}^{n}")?;
            }
        }
        f.write_str("}")
    }
}
