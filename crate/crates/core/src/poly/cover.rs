//! Branch loci and discriminants of the double and triple cover models of a
//! quintic with a point of high multiplicity, written in `x0, x1, x2`.

use super::SparsePolynomial;
use crate::error::{invalid, Result};
use crate::lattice::Rational;

pub const PLANE_VARS: [&str; 3] = ["x0", "x1", "x2"];

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn require(p: &SparsePolynomial, name: &str, degree: u32) -> Result<()> {
    if p.variables() != PLANE_VARS {
        return invalid(format!("{name} must be a polynomial in x0, x1, x2"));
    }
    if !p.is_homogeneous_of_degree(degree) {
        return invalid(format!("{name} must be homogeneous of degree {degree}, got {p}"));
    }
    Ok(())
}

/// `f3·f5 - f4²`, of degree 8.
pub fn branch_octic(f3: &SparsePolynomial, f4: &SparsePolynomial, f5: &SparsePolynomial) -> Result<SparsePolynomial> {
    require(f3, "f3", 3)?;
    require(f4, "f4", 4)?;
    require(f5, "f5", 5)?;
    Ok(&(f3 * f5) - &(f4 * f4))
}

/// Depressing `φ³ + g2 φ² + f4 φ + x0 f5` by `φ = ψ - g2/3` gives
/// `ψ³ + h4 ψ + h6` with
/// `h4 = f4 - g2²/3` and `h6 = x0 f5 + 2/27 g2³ - g2 f4/3`.
pub fn triple_cover_form(
    g2: &SparsePolynomial,
    f4: &SparsePolynomial,
    f5: &SparsePolynomial,
) -> Result<(SparsePolynomial, SparsePolynomial)> {
    require(g2, "g2", 2)?;
    require(f4, "f4", 4)?;
    require(f5, "f5", 5)?;
    let x0 = SparsePolynomial::var(&PLANE_VARS, 0);
    let g2sq = g2 * g2;
    let h4 = f4 - &g2sq.scale(&q(1, 3));
    let h6 = &(&(&x0 * f5) + &(&g2sq * g2).scale(&q(2, 27))) - &(g2 * f4).scale(&q(1, 3));
    Ok((h4, h6))
}

/// `4 h4³ + 27 h6²`, of degree 12.
pub fn cover_discriminant(h4: &SparsePolynomial, h6: &SparsePolynomial) -> Result<SparsePolynomial> {
    require(h4, "h4", 4)?;
    require(h6, "h6", 6)?;
    Ok(&h4.pow(3).scale(&q(4, 1)) + &h6.pow(2).scale(&q(27, 1)))
}

/// Exponents `(j0, j1, j2)` of degree `deg` with `w·j ≥ c`, lex-descending.
pub fn weighted_support(w: [i64; 3], c: i64, deg: u32) -> Vec<[u32; 3]> {
    super::exponents_of_degree(3, deg)
        .into_iter()
        .map(|e| [e[0], e[1], e[2]])
        .filter(|e| e.iter().zip(w).map(|(&j, wi)| j as i64 * wi).sum::<i64>() >= c)
        .collect()
}
