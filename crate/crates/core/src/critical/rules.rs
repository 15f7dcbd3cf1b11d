//! Rules choosing one representative among subgroups with identical `M⊕`.

use crate::error::{Error, Result};
use crate::lattice::OneParamSubgroup;
use crate::reference::REFERENCE_CRITICAL;

pub trait RepresentativeRule: Send + Sync {
    fn name(&self) -> &'static str;
    fn description(&self) -> &'static str;
    /// `class` is non-empty, normalized and sorted lexicographically ascending.
    fn choose(&self, d: u32, class: &[OneParamSubgroup]) -> OneParamSubgroup;
}

/// Lexicographically smallest weight vector.
pub struct LexMin;

impl RepresentativeRule for LexMin {
    fn name(&self) -> &'static str {
        "lex-min"
    }
    fn description(&self) -> &'static str {
        "lexicographically smallest weight vector"
    }
    fn choose(&self, _d: u32, class: &[OneParamSubgroup]) -> OneParamSubgroup {
        class[0]
    }
}

/// Smallest Euclidean norm, then lexicographically smallest.
pub struct MinNorm;

impl RepresentativeRule for MinNorm {
    fn name(&self) -> &'static str {
        "min-norm"
    }
    fn description(&self) -> &'static str {
        "smallest squared norm, then lexicographically smallest"
    }
    fn choose(&self, _d: u32, class: &[OneParamSubgroup]) -> OneParamSubgroup {
        *class.iter().min_by_key(|l| (l.norm_squared(), **l)).expect("non-empty class")
    }
}

/// The conventionally published representative when the class contains
/// one, otherwise lexicographically smallest.
pub struct Reference;

impl RepresentativeRule for Reference {
    fn name(&self) -> &'static str {
        "reference"
    }
    fn description(&self) -> &'static str {
        "published quintic representative when present, else lexicographically smallest"
    }
    fn choose(&self, d: u32, class: &[OneParamSubgroup]) -> OneParamSubgroup {
        if d == crate::reference::REFERENCE_DEGREE {
            if let Some(l) = class.iter().find(|l| REFERENCE_CRITICAL.contains(&l.0)) {
                return *l;
            }
        }
        class[0]
    }
}

pub const DEFAULT_RULE: &str = "reference";

pub struct RuleRegistry {
    rules: Vec<Box<dyn RepresentativeRule>>,
}

impl RuleRegistry {
    pub fn empty() -> Self {
        RuleRegistry { rules: Vec::new() }
    }

    pub fn register(&mut self, rule: Box<dyn RepresentativeRule>) {
        self.rules.retain(|r| r.name() != rule.name());
        self.rules.push(rule);
    }

    pub fn get(&self, name: &str) -> Result<&dyn RepresentativeRule> {
        self.rules.iter().find(|r| r.name() == name).map(|r| r.as_ref()).ok_or_else(|| {
            Error::UnknownStrategy { kind: "tie rule", name: name.to_string(), available: self.names().join(", ") }
        })
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.rules.iter().map(|r| r.name()).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn RepresentativeRule> + '_ {
        self.rules.iter().map(|r| r.as_ref())
    }
}

impl Default for RuleRegistry {
    fn default() -> Self {
        let mut r = RuleRegistry::empty();
        r.register(Box::new(Reference));
        r.register(Box::new(LexMin));
        r.register(Box::new(MinNorm));
        r
    }
}
