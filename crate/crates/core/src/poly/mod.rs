//! Sparse multivariate polynomials with exact rational coefficients.

pub mod cover;
mod parse;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use rand::Rng;

use crate::error::{invalid, Result};
use crate::lattice::{ExponentVector, MonomialConfiguration, Rational};

pub use parse::parse;

/// Exponent vector keyed map to nonzero coefficients over a fixed, named
/// variable list. Terms are kept lexicographically descending.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SparsePolynomial {
    variables: Vec<String>,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl SparsePolynomial {
    pub fn zero<S: AsRef<str>>(variables: &[S]) -> Self {
        SparsePolynomial { variables: variables.iter().map(|v| v.as_ref().to_string()).collect(), terms: BTreeMap::new() }
    }

    pub fn constant<S: AsRef<str>>(variables: &[S], c: Rational) -> Self {
        Self::monomial(variables, vec![0; variables.len()], c)
    }

    pub fn monomial<S: AsRef<str>>(variables: &[S], exps: Vec<u32>, c: Rational) -> Self {
        assert_eq!(exps.len(), variables.len(), "exponent length must match variable count");
        let mut p = Self::zero(variables);
        p.add_term(exps, c);
        p
    }

    pub fn var<S: AsRef<str>>(variables: &[S], i: usize) -> Self {
        let mut e = vec![0; variables.len()];
        e[i] = 1;
        Self::monomial(variables, e, Rational::one())
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn nvars(&self) -> usize {
        self.variables.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in lexicographically descending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Rational)> + '_ {
        self.terms.iter().rev().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn coefficient(&self, exps: &[u32]) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// `Some(d)` when every term has degree `d`; the zero polynomial is
    /// homogeneous of every degree and reports `None`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous_of_degree(&self, d: u32) -> bool {
        self.terms.keys().all(|e| e.iter().sum::<u32>() == d)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(&self.variables);
        if c.is_zero() {
            return out;
        }
        out.terms = self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect();
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::constant(&self.variables, Rational::one());
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Replaces variable `i` by `value`, which must share the variable list.
    pub fn substitute(&self, i: usize, value: &SparsePolynomial) -> Result<Self> {
        if value.variables != self.variables {
            return invalid("substituted polynomial must use the same variables");
        }
        if i >= self.nvars() {
            return invalid(format!("variable index {i} out of range"));
        }
        let mut powers: Vec<SparsePolynomial> = vec![Self::constant(&self.variables, Rational::one())];
        let mut out = Self::zero(&self.variables);
        for (e, c) in &self.terms {
            while powers.len() <= e[i] as usize {
                let next = powers.last().expect("non-empty") * value;
                powers.push(next);
            }
            let mut rest = e.clone();
            rest[i] = 0;
            let mono = Self::monomial(&self.variables, rest, c.clone());
            out = &out + &(&mono * &powers[e[i] as usize]);
        }
        Ok(out)
    }

    /// The same polynomial over a larger variable list containing the
    /// current variables.
    pub fn embed<S: AsRef<str>>(&self, variables: &[S]) -> Result<Self> {
        let names: Vec<String> = variables.iter().map(|v| v.as_ref().to_string()).collect();
        let mut map = Vec::with_capacity(self.nvars());
        for v in &self.variables {
            match names.iter().position(|n| n == v) {
                Some(p) => map.push(p),
                None => return invalid(format!("variable {v} missing from target ring")),
            }
        }
        let mut out = Self::zero(&names);
        for (e, c) in &self.terms {
            let mut t = vec![0; names.len()];
            for (k, &p) in map.iter().enumerate() {
                t[p] = e[k];
            }
            out.add_term(t, c.clone());
        }
        Ok(out)
    }

    /// Support of a form in four variables.
    pub fn support(&self) -> Result<MonomialConfiguration> {
        if self.nvars() != 4 {
            return invalid(format!("expected 4 variables, found {}", self.nvars()));
        }
        let Some(d) = self.homogeneous_degree() else {
            return invalid("support requires a nonzero homogeneous polynomial");
        };
        MonomialConfiguration::new(d, self.terms.keys().map(|e| ExponentVector([e[0], e[1], e[2], e[3]])))
    }

    fn check_same_ring(&self, other: &Self) {
        assert_eq!(self.variables, other.variables, "polynomials over different variable lists");
    }
}

impl Add for &SparsePolynomial {
    type Output = SparsePolynomial;
    fn add(self, rhs: &SparsePolynomial) -> SparsePolynomial {
        self.check_same_ring(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &SparsePolynomial {
    type Output = SparsePolynomial;
    fn sub(self, rhs: &SparsePolynomial) -> SparsePolynomial {
        self.check_same_ring(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Mul for &SparsePolynomial {
    type Output = SparsePolynomial;
    fn mul(self, rhs: &SparsePolynomial) -> SparsePolynomial {
        self.check_same_ring(rhs);
        let mut out = SparsePolynomial::zero(&self.variables);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &SparsePolynomial {
    type Output = SparsePolynomial;
    fn neg(self) -> SparsePolynomial {
        self.scale(&-Rational::one())
    }
}

fn write_rational(f: &mut fmt::Formatter<'_>, c: &Rational) -> fmt::Result {
    if c.is_integer() {
        write!(f, "{}", c.numer())
    } else {
        write!(f, "{}/{}", c.numer(), c.denom())
    }
}

/// Canonical text: terms descending, explicit ` + ` / ` - `, coefficient `1`
/// omitted, rationals as `p/q`.
impl fmt::Display for SparsePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(v, &k)| if k == 1 { self.variables[v].clone() } else { format!("{}^{k}", self.variables[v]) })
                .collect();
            if vars.is_empty() {
                write_rational(f, &a)?;
                continue;
            }
            if !a.is_one() {
                write_rational(f, &a)?;
                f.write_str("*")?;
            }
            f.write_str(&vars.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for SparsePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Nonzero rational with numerator in `±[1, 50]` and denominator in `[1, 9]`.
pub fn random_coefficient<R: Rng>(rng: &mut R) -> Rational {
    let num: i64 = rng.gen_range(1..=50) * if rng.gen_bool(0.5) { 1 } else { -1 };
    Rational::new(num.into(), rng.gen_range(1..=9i64).into())
}

/// Every exponent vector of total degree `d` in `n` variables, lex-descending.
pub fn exponents_of_degree(n: usize, d: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=d).rev() {
        for mut rest in exponents_of_degree(n - 1, d - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// A form with random nonzero coefficients on `support`.
pub fn random_form<S: AsRef<str>, R: Rng>(variables: &[S], support: &[Vec<u32>], rng: &mut R) -> SparsePolynomial {
    let mut p = SparsePolynomial::zero(variables);
    for e in support {
        p.add_term(e.clone(), random_coefficient(rng));
    }
    p
}
