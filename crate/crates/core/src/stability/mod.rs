//! Torus stability of monomial configurations via the Hilbert–Mumford
//! criterion, certificates against the critical list, worst subgroups and
//! destabilizing flags.

pub mod hull;
pub mod lp;
pub mod nearest;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::critical::CriticalRecord;
use crate::error::{invalid, Error, Result};
use crate::lattice::{
    centroid, primitive_direction, MonomialConfiguration, OneParamSubgroup, Permutation, Rational, NVARS,
};

pub use hull::{affine_rank, hull_membership, HullVerdict};

/// `min { λ·m : m ∈ support }`.
pub fn mu(lambda: &OneParamSubgroup, cfg: &MonomialConfiguration) -> Result<i64> {
    cfg.iter()
        .map(|m| lambda.pairing(m))
        .min()
        .ok_or_else(|| Error::InvalidArgument("μ of an empty configuration".into()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TorusVerdict {
    Stable,
    StrictlySemistable,
    Unstable,
}

impl TorusVerdict {
    pub fn from_hull(v: &HullVerdict) -> Self {
        match v {
            HullVerdict::Inside { .. } => TorusVerdict::Stable,
            HullVerdict::Boundary { .. } => TorusVerdict::StrictlySemistable,
            HullVerdict::Outside { .. } => TorusVerdict::Unstable,
        }
    }
}

pub fn torus_verdict(cfg: &MonomialConfiguration) -> Result<TorusVerdict> {
    Ok(TorusVerdict::from_hull(&hull_membership(&centroid(cfg.degree())?, cfg)?))
}

/// `σ(cfg) ⊆ M⊕(λ_i)` for a coordinate permutation `σ` and a critical record.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub permutation: Permutation,
    /// Position in the critical list (0-based).
    pub critical_index: usize,
    pub lambda: OneParamSubgroup,
    /// The same subgroup acting on the unpermuted coordinates.
    pub lambda_original: OneParamSubgroup,
    pub mu: i64,
}

/// First `(σ, i)` in lexicographic permutation order, then critical order.
pub fn nonstable_certificate(
    cfg: &MonomialConfiguration,
    critical: &[CriticalRecord],
) -> Result<Option<Certificate>> {
    if cfg.is_empty() {
        return invalid("empty configuration");
    }
    if let Some(r) = critical.iter().find(|r| r.degree() != cfg.degree()) {
        return invalid(format!("critical list has degree {} but configuration has degree {}", r.degree(), cfg.degree()));
    }
    for perm in Permutation::all() {
        let moved = cfg.permuted(&perm);
        for (i, rec) in critical.iter().enumerate() {
            if moved.is_subset(&rec.nonneg) {
                let mu_value = mu(&rec.lambda, &moved)?;
                debug_assert!(mu_value >= 0);
                return Ok(Some(Certificate {
                    permutation: perm,
                    critical_index: i,
                    lambda: rec.lambda,
                    lambda_original: rec.lambda.in_original_coordinates(&perm),
                    mu: mu_value,
                }));
            }
        }
    }
    Ok(None)
}

/// The direction maximizing `μ(λ)/‖λ‖` for an unstable configuration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WorstSubgroup {
    /// Primitive, in the configuration's coordinates.
    pub lambda: OneParamSubgroup,
    pub normalized: OneParamSubgroup,
    pub mu: i64,
    /// `(μ(λ)/‖λ‖)²`.
    pub squared_ratio: Rational,
}

pub fn worst_1ps(cfg: &MonomialConfiguration) -> Result<Option<WorstSubgroup>> {
    if cfg.is_empty() {
        return invalid("empty configuration");
    }
    let p = centroid(cfg.degree())?;
    if !matches!(hull_membership(&p, cfg)?, HullVerdict::Outside { .. }) {
        return Ok(None);
    }
    let offs: Vec<[Rational; NVARS]> =
        cfg.iter().map(|m| std::array::from_fn(|j| Rational::from_integer(m.0[j].into()) - &p.0[j])).collect();
    let (q, squared_ratio) = nearest::nearest_point(&offs);
    let lambda = OneParamSubgroup(
        primitive_direction(&q).ok_or_else(|| Error::Inconsistency("unstable configuration at distance 0".into()))?,
    );
    Ok(Some(WorstSubgroup { lambda, normalized: lambda.normalized()?, mu: mu(&lambda, cfg)?, squared_ratio }))
}

/// Destabilizing flag `point ∈ line ⊂ plane` of a subgroup; members are absent
/// when consecutive weights coincide.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct KempfFlag {
    /// Coordinate point `p_i`, cut out by all `x_j` with `j ≠ i`.
    pub point: Option<usize>,
    /// `V(x_i, x_j)`.
    pub line: Option<[usize; 2]>,
    /// `V(x_i)`.
    pub plane: Option<usize>,
    pub partial: bool,
}

impl std::fmt::Display for KempfFlag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut s = String::new();
        if let Some(p) = self.point {
            s.push_str(&format!("p{p}"));
        }
        if let Some([a, b]) = self.line {
            if !s.is_empty() {
                s.push_str(" ∈ ");
            }
            s.push_str(&format!("V(x{a},x{b})"));
        }
        if let Some(h) = self.plane {
            if !s.is_empty() {
                s.push_str(if self.line.is_some() { " ⊂ " } else { " ∈ " });
            }
            s.push_str(&format!("V(x{h})"));
        }
        f.write_str(if s.is_empty() { "trivial" } else { &s })?;
        if self.partial {
            f.write_str(" (partial)")?;
        }
        Ok(())
    }
}

/// Coordinates are ranked by weight (ties by index); a flag member exists
/// exactly when the corresponding gap in the ranked weights is strict.
pub fn kempf_flag(lambda: &OneParamSubgroup) -> Result<KempfFlag> {
    if lambda.is_zero() {
        return invalid("the trivial subgroup has no flag");
    }
    let order = lambda.sorting_permutation().0;
    let w: [i64; NVARS] = order.map(|i| lambda.0[i]);
    let plane = (w[0] > w[1]).then_some(order[0]);
    let line = (w[1] > w[2]).then(|| {
        let mut l = [order[0], order[1]];
        l.sort_unstable();
        l
    });
    let point = (w[2] > w[3]).then_some(order[3]);
    let partial = plane.is_none() || line.is_none() || point.is_none();
    Ok(KempfFlag { point, line, plane, partial })
}

/// Everything the torus test says about one configuration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilityReport {
    pub verdict: TorusVerdict,
    pub hull: HullVerdict,
    pub certificate: Option<Certificate>,
    pub certificate_flag: Option<KempfFlag>,
    pub worst: Option<WorstSubgroup>,
    pub worst_flag: Option<KempfFlag>,
}

pub fn stability_report(cfg: &MonomialConfiguration, critical: &[CriticalRecord]) -> Result<StabilityReport> {
    let hull = hull_membership(&centroid(cfg.degree())?, cfg)?;
    let verdict = TorusVerdict::from_hull(&hull);
    let certificate = nonstable_certificate(cfg, critical)?;
    let worst = worst_1ps(cfg)?;
    let certificate_flag = certificate.as_ref().map(|c| kempf_flag(&c.lambda_original)).transpose()?;
    let worst_flag = worst.as_ref().map(|w| kempf_flag(&w.lambda)).transpose()?;
    Ok(StabilityReport { verdict, hull, certificate, certificate_flag, worst, worst_flag })
}

/// `μ(λ)² == ratio · ‖λ‖²`.
pub fn worst_is_consistent(w: &WorstSubgroup) -> bool {
    let lhs = Rational::from_integer((w.mu * w.mu).into());
    let rhs = &w.squared_ratio * Rational::from_integer(w.lambda.norm_squared().into());
    lhs == rhs && w.mu > 0 && !w.squared_ratio.is_zero() && w.squared_ratio.is_positive()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::critical::enumerate_critical;
    use crate::lattice::{enumerate_monomials, ExponentVector};

    fn cfg(d: u32, ms: &[[u32; 4]]) -> MonomialConfiguration {
        MonomialConfiguration::new(d, ms.iter().map(|&m| ExponentVector(m))).unwrap()
    }

    fn fermat() -> MonomialConfiguration {
        cfg(5, &[[5, 0, 0, 0], [0, 5, 0, 0], [0, 0, 5, 0], [0, 0, 0, 5]])
    }

    fn two_q_h() -> MonomialConfiguration {
        cfg(5, &[[2, 1, 0, 2], [0, 1, 4, 0], [0, 5, 0, 0], [1, 1, 2, 1], [1, 3, 0, 1], [0, 3, 2, 0]])
    }

    fn filtered(d: u32, keep: impl Fn(&ExponentVector) -> bool) -> MonomialConfiguration {
        MonomialConfiguration::new(d, enumerate_monomials(d).unwrap().into_iter().filter(|m| keep(m))).unwrap()
    }

    #[test]
    fn mu_examples() {
        let l1 = OneParamSubgroup([1, 0, 0, -1]);
        assert_eq!(mu(&l1, &fermat()).unwrap(), -5);
        assert_eq!(mu(&l1, &two_q_h()).unwrap(), 0);
        let q4 = filtered(5, |m| m.0[3] <= 1);
        assert_eq!(mu(&OneParamSubgroup([2, 1, 1, -4]), &q4).unwrap(), 0);
        assert!(mu(&l1, &MonomialConfiguration::empty(5)).is_err());
    }

    #[test]
    fn verdicts() {
        assert_eq!(torus_verdict(&fermat()).unwrap(), TorusVerdict::Stable);
        assert_eq!(torus_verdict(&two_q_h()).unwrap(), TorusVerdict::StrictlySemistable);
        assert_eq!(torus_verdict(&filtered(5, |m| m.0[3] == 0)).unwrap(), TorusVerdict::Unstable);
    }

    #[test]
    fn certificates() {
        let recs = enumerate_critical(5).unwrap();
        assert_eq!(nonstable_certificate(&fermat(), &recs).unwrap(), None);

        let q4 = nonstable_certificate(&filtered(5, |m| m.0[3] <= 1), &recs).unwrap().unwrap();
        assert_eq!(q4.lambda, OneParamSubgroup([2, 1, 1, -4]));
        assert_eq!(q4.permutation, Permutation::IDENTITY);

        let line = filtered(5, |m| m.0[0] + m.0[1] >= 3);
        let c = nonstable_certificate(&line, &recs).unwrap().unwrap();
        assert_eq!(c.lambda, OneParamSubgroup([2, 2, -1, -3]));
        assert!(mu(&c.lambda_original, &line).unwrap() >= 0);
    }

    #[test]
    fn worst_examples() {
        let cone = filtered(5, |m| m.0[3] == 0);
        let w = worst_1ps(&cone).unwrap().unwrap();
        assert_eq!(w.lambda, OneParamSubgroup([1, 1, 1, -3]));
        assert_eq!(w.squared_ratio, Rational::new(25.into(), 12.into()));
        assert!(worst_is_consistent(&w));

        let quad_line = cfg(5, &[[0, 4, 0, 1], [0, 3, 1, 1], [0, 2, 2, 1], [0, 1, 3, 1], [0, 0, 4, 1]]);
        let w = worst_1ps(&quad_line).unwrap().unwrap();
        assert_eq!(w.lambda, OneParamSubgroup([-5, 3, 3, -1]));
        assert_eq!(w.normalized, OneParamSubgroup([3, 3, -1, -5]));
        assert!(worst_is_consistent(&w));

        assert_eq!(worst_1ps(&fermat()).unwrap(), None);
    }

    #[test]
    fn flags() {
        let full = kempf_flag(&OneParamSubgroup([2, 1, 0, -3])).unwrap();
        assert_eq!(full, KempfFlag { point: Some(3), line: Some([0, 1]), plane: Some(0), partial: false });
        let l1 = kempf_flag(&OneParamSubgroup([1, 0, 0, -1])).unwrap();
        assert_eq!(l1, KempfFlag { point: Some(3), line: None, plane: Some(0), partial: true });
        let l9 = kempf_flag(&OneParamSubgroup([7, 1, -4, -4])).unwrap();
        assert_eq!(l9, KempfFlag { point: None, line: Some([0, 1]), plane: Some(0), partial: true });
        assert!(kempf_flag(&OneParamSubgroup([0; 4])).is_err());
        assert_eq!(full.to_string(), "p3 ∈ V(x0,x1) ⊂ V(x0)");
    }
}
