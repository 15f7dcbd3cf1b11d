use num_traits::{One, Signed, Zero};

use super::lp::{maximize, LpOutcome};
use super::nearest::nearest_point;
use crate::error::{invalid, Result};
use crate::lattice::{
    primitive_direction, ExponentVector, MonomialConfiguration, OneParamSubgroup, Rational, RationalPoint4,
    NVARS,
};
use crate::linalg::{nullspace, rank};

/// Position of a point relative to the convex hull of a configuration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HullVerdict {
    /// Relative interior of a full-dimensional hull. Every support monomial
    /// carries a strictly positive barycentric coefficient.
    Inside { barycentric: Vec<(ExponentVector, Rational)> },
    /// In the hull, on a supporting hyperplane `λ·(m - p) ≥ 0`.
    Boundary { barycentric: Vec<(ExponentVector, Rational)>, supporting: OneParamSubgroup },
    /// `λ·(m - p) > 0` for every support monomial.
    Outside { separating: OneParamSubgroup },
}

impl HullVerdict {
    pub fn name(&self) -> &'static str {
        match self {
            HullVerdict::Inside { .. } => "Inside",
            HullVerdict::Boundary { .. } => "Boundary",
            HullVerdict::Outside { .. } => "Outside",
        }
    }

    /// Re-checks the witness against `p` and `cfg` in exact arithmetic.
    pub fn verify(&self, p: &RationalPoint4, cfg: &MonomialConfiguration) -> bool {
        match self {
            HullVerdict::Inside { barycentric } => {
                barycentric.len() == cfg.len()
                    && barycentric.iter().all(|(_, w)| w.is_positive())
                    && reconstructs(barycentric, p, cfg)
                    && affine_rank(cfg) == NVARS - 1
            }
            HullVerdict::Boundary { barycentric, supporting } => {
                !supporting.is_zero()
                    && barycentric.iter().all(|(_, w)| !w.is_negative())
                    && reconstructs(barycentric, p, cfg)
                    && cfg.iter().all(|m| !offset_pairing(supporting, m, p).is_negative())
            }
            HullVerdict::Outside { separating } => {
                cfg.iter().all(|m| offset_pairing(separating, m, p).is_positive())
            }
        }
    }
}

fn reconstructs(bary: &[(ExponentVector, Rational)], p: &RationalPoint4, cfg: &MonomialConfiguration) -> bool {
    let total = bary.iter().fold(Rational::zero(), |acc, (_, w)| acc + w);
    if !total.is_one() || !bary.iter().all(|(m, _)| cfg.contains(m)) {
        return false;
    }
    (0..NVARS).all(|j| {
        let s = bary
            .iter()
            .fold(Rational::zero(), |acc, (m, w)| acc + w * Rational::from_integer(m.0[j].into()));
        s == p.0[j]
    })
}

/// `λ·(m - p)`.
pub(crate) fn offset_pairing(lambda: &OneParamSubgroup, m: &ExponentVector, p: &RationalPoint4) -> Rational {
    Rational::from_integer(lambda.pairing(m).into()) - lambda.pairing_rational(p)
}

/// Dimension of the affine span of the support.
pub fn affine_rank(cfg: &MonomialConfiguration) -> usize {
    let pts: Vec<_> = cfg.iter().collect();
    let Some(first) = pts.first() else { return 0 };
    let rows: Vec<Vec<Rational>> = pts[1..]
        .iter()
        .map(|m| (0..NVARS).map(|j| Rational::from_integer((m.0[j] as i64 - first.0[j] as i64).into())).collect())
        .collect();
    rank(&rows)
}

fn offsets(cfg: &MonomialConfiguration, p: &RationalPoint4) -> Vec<[Rational; NVARS]> {
    cfg.iter().map(|m| std::array::from_fn(|j| Rational::from_integer(m.0[j].into()) - &p.0[j])).collect()
}

/// Decides where `p` lies relative to `conv(cfg)` inside the hyperplane
/// `Σ x_i = d`, with an exact witness.
pub fn hull_membership(p: &RationalPoint4, cfg: &MonomialConfiguration) -> Result<HullVerdict> {
    if cfg.is_empty() {
        return invalid("empty configuration");
    }
    if p.coordinate_sum() != Rational::from_integer(cfg.degree().into()) {
        return invalid("point does not lie on the hyperplane of the configuration's degree");
    }
    let pts = cfg.to_vec();
    let n = pts.len();

    // Variables (t, y_1..y_n) ≥ 0 with weights w_k = t + y_k:
    //   n t + Σ y = 1,  Σ_k w_k m_kj = p_j (j < 3).  Maximize t.
    let mut a = Vec::with_capacity(NVARS);
    let mut b = Vec::with_capacity(NVARS);
    let mut row = vec![Rational::from_integer((n as i64).into())];
    row.extend((0..n).map(|_| Rational::one()));
    a.push(row);
    b.push(Rational::one());
    for j in 0..NVARS - 1 {
        let col: Vec<Rational> = pts.iter().map(|m| Rational::from_integer(m.0[j].into())).collect();
        let mut row = vec![col.iter().fold(Rational::zero(), |acc, x| acc + x)];
        row.extend(col);
        a.push(row);
        b.push(p.0[j].clone());
    }
    let mut c = vec![Rational::zero(); n + 1];
    c[0] = Rational::one();

    let (t, x) = match maximize(&a, &b, &c) {
        LpOutcome::Optimal { value, x } => (value, x),
        LpOutcome::Infeasible => return outside(p, cfg),
        LpOutcome::Unbounded => unreachable!("t is bounded by 1/n"),
    };
    let barycentric: Vec<(ExponentVector, Rational)> = pts
        .iter()
        .zip(&x[1..])
        .map(|(m, y)| (*m, &t + y))
        .filter(|(_, w)| !w.is_zero())
        .collect();
    if t.is_positive() && affine_rank(cfg) == NVARS - 1 {
        return Ok(HullVerdict::Inside { barycentric });
    }
    let supporting = supporting_subgroup(p, cfg)?;
    Ok(HullVerdict::Boundary { barycentric, supporting })
}

fn outside(p: &RationalPoint4, cfg: &MonomialConfiguration) -> Result<HullVerdict> {
    let (q, _) = nearest_point(&offsets(cfg, p));
    let separating = primitive_direction(&q)
        .map(OneParamSubgroup)
        .ok_or_else(|| crate::Error::Inconsistency("nearest point of an outside hull is the origin".into()))?;
    Ok(HullVerdict::Outside { separating })
}

/// Nonzero sum-zero `λ` with `λ·(m - p) ≥ 0` on the support, for `p` on the
/// relative boundary of (or in a degenerate) hull.
fn supporting_subgroup(p: &RationalPoint4, cfg: &MonomialConfiguration) -> Result<OneParamSubgroup> {
    let offs = offsets(cfg, p);
    let ones: Vec<Rational> = vec![Rational::one(); NVARS];
    let as_rows = |vs: &[&[Rational; NVARS]]| -> Vec<Vec<Rational>> {
        let mut rows: Vec<Vec<Rational>> = vs.iter().map(|v| v.to_vec()).collect();
        rows.push(ones.clone());
        rows
    };

    let all: Vec<&[Rational; NVARS]> = offs.iter().collect();
    let complement = nullspace(&as_rows(&all), NVARS);
    if let Some(v) = complement.first() {
        return to_subgroup(v);
    }

    for i in 0..offs.len() {
        for j in i + 1..offs.len() {
            let ns = nullspace(&as_rows(&[&offs[i], &offs[j]]), NVARS);
            if ns.len() != 1 {
                continue;
            }
            let v = &ns[0];
            let signs: Vec<Rational> = offs.iter().map(|o| crate::linalg::dot(o, v)).collect();
            if signs.iter().all(|s| !s.is_negative()) {
                return to_subgroup(v);
            }
            if signs.iter().all(|s| !s.is_positive()) {
                return to_subgroup(&v.iter().map(|x| -x).collect::<Vec<_>>());
            }
        }
    }
    Err(crate::Error::Inconsistency("no supporting hyperplane found for a boundary point".into()))
}

fn to_subgroup(v: &[Rational]) -> Result<OneParamSubgroup> {
    let arr: [Rational; NVARS] = std::array::from_fn(|j| v[j].clone());
    primitive_direction(&arr)
        .map(OneParamSubgroup)
        .ok_or_else(|| crate::Error::Inconsistency("zero supporting direction".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{centroid, zero_set};

    fn cfg(d: u32, ms: &[[u32; 4]]) -> MonomialConfiguration {
        MonomialConfiguration::new(d, ms.iter().map(|&m| ExponentVector(m))).unwrap()
    }

    #[test]
    fn fermat_inside() {
        let f = cfg(5, &[[5, 0, 0, 0], [0, 5, 0, 0], [0, 0, 5, 0], [0, 0, 0, 5]]);
        let p = centroid(5).unwrap();
        let v = hull_membership(&p, &f).unwrap();
        assert!(matches!(v, HullVerdict::Inside { .. }));
        assert!(v.verify(&p, &f));
    }

    #[test]
    fn lambda7_zero_set_outside() {
        let z = zero_set(&OneParamSubgroup([2, 1, 1, -4]), 5).unwrap();
        let p = centroid(5).unwrap();
        let v = hull_membership(&p, &z).unwrap();
        match &v {
            HullVerdict::Outside { separating } => assert!(separating.0[0] < 0),
            other => panic!("{other:?}"),
        }
        assert!(v.verify(&p, &z));
    }

    #[test]
    fn two_q_plus_h_boundary() {
        let s = cfg(5, &[[2, 1, 0, 2], [0, 1, 4, 0], [0, 5, 0, 0], [1, 1, 2, 1], [1, 3, 0, 1], [0, 3, 2, 0]]);
        let p = centroid(5).unwrap();
        let v = hull_membership(&p, &s).unwrap();
        assert!(matches!(v, HullVerdict::Boundary { .. }), "{v:?}");
        assert!(v.verify(&p, &s));
    }

    #[test]
    fn facet_boundary() {
        // Full-dimensional hull with the centroid on the facet i0 = i3.
        let s = cfg(4, &[[2, 0, 0, 2], [0, 4, 0, 0], [0, 0, 4, 0], [0, 2, 2, 0], [4, 0, 0, 0]]);
        let p = centroid(4).unwrap();
        let v = hull_membership(&p, &s).unwrap();
        match &v {
            HullVerdict::Boundary { supporting, .. } => assert_eq!(*supporting, OneParamSubgroup([1, 0, 0, -1])),
            other => panic!("{other:?}"),
        }
        assert!(v.verify(&p, &s));
    }

    #[test]
    fn rejects_bad_input() {
        let p = centroid(5).unwrap();
        assert!(hull_membership(&p, &MonomialConfiguration::empty(5)).is_err());
        assert!(hull_membership(&p, &cfg(4, &[[4, 0, 0, 0]])).is_err());
    }
}
