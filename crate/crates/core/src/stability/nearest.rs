//! Exact nearest point to the origin of the convex hull of at most a few
//! dozen points in a 3-dimensional subspace of `Q⁴`.

use num_traits::{Signed, Zero};

use crate::lattice::{Rational, NVARS};
use crate::linalg::solve;

type Point = [Rational; NVARS];

fn dot(a: &Point, b: &Point) -> Rational {
    a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

fn sub(a: &Point, b: &Point) -> Point {
    std::array::from_fn(|j| &a[j] - &b[j])
}

/// Orthogonal projection of the origin onto the affine hull of `simplex`,
/// if the simplex is affinely independent and the projection falls inside it.
fn project_origin(simplex: &[&Point]) -> Option<Point> {
    let base = simplex[0];
    let dirs: Vec<Point> = simplex[1..].iter().map(|s| sub(s, base)).collect();
    let k = dirs.len();
    if k == 0 {
        return Some(base.clone());
    }
    // Minimize |base + Σ β_i v_i|²: Gram · β = -V·base.
    let gram: Vec<Vec<Rational>> = (0..k).map(|i| (0..k).map(|j| dot(&dirs[i], &dirs[j])).collect()).collect();
    let rhs: Vec<Rational> = dirs.iter().map(|v| -dot(v, base)).collect();
    let beta = solve(&gram, &rhs)?;
    let sum = beta.iter().fold(Rational::zero(), |acc, b| acc + b);
    if beta.iter().any(|b| b.is_negative()) || sum > Rational::from_integer(1.into()) {
        return None;
    }
    let mut q = base.clone();
    for (b, v) in beta.iter().zip(&dirs) {
        for j in 0..NVARS {
            q[j] += b * &v[j];
        }
    }
    Some(q)
}

/// Returns the point of `conv(points)` closest to the origin and its squared
/// norm. Searches every face spanned by at most three of the points; ties are
/// resolved by enumeration order.
pub fn nearest_point(points: &[Point]) -> (Point, Rational) {
    assert!(!points.is_empty(), "nearest point of an empty set");
    let mut best: Option<(Point, Rational)> = None;
    let mut consider = |q: Point| {
        let d = dot(&q, &q);
        if best.as_ref().is_none_or(|(_, bd)| d < *bd) {
            best = Some((q, d));
        }
    };
    let n = points.len();
    for p in points {
        consider(p.clone());
    }
    for i in 0..n {
        for j in i + 1..n {
            if let Some(q) = project_origin(&[&points[i], &points[j]]) {
                consider(q);
            }
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if let Some(q) = project_origin(&[&points[i], &points[j], &points[k]]) {
                    consider(q);
                }
            }
        }
    }
    best.expect("non-empty input")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(v: [i64; 4]) -> Point {
        v.map(|x| Rational::from_integer(x.into()))
    }

    #[test]
    fn segment_projection() {
        let (q, d) = nearest_point(&[pt([2, -2, 0, 0]), pt([2, 2, 0, 0])]);
        assert_eq!(q, pt([2, 0, 0, 0]));
        assert_eq!(d, Rational::from_integer(4.into()));
    }

    #[test]
    fn triangle_interior() {
        let (q, d) = nearest_point(&[pt([3, 0, 0, -3]), pt([0, 3, 0, -3]), pt([0, 0, 3, -3])]);
        assert_eq!(q, pt([1, 1, 1, -3]));
        assert_eq!(d, Rational::from_integer(12.into()));
    }

    #[test]
    fn vertex_is_nearest() {
        let (q, _) = nearest_point(&[pt([1, 0, 0, -1]), pt([5, 0, 0, -5]), pt([3, 3, 0, -6])]);
        assert_eq!(q, pt([1, 0, 0, -1]));
    }
}
