//! Exact feasibility of `{x >= 0 : A x = b}` by the two-phase simplex
//! method's first phase, with Bland's rule to rule out cycling.

use num_traits::{One, Signed, Zero};

use crate::linalg::Vector;
use crate::poly::Rational;

/// Returns a feasible point of `{x >= 0 : a x = b}`, or `None`.
pub fn lp_feasible(a: &[Vector], b: &[Rational]) -> Option<Vector> {
    let m = a.len();
    assert_eq!(b.len(), m, "right-hand side length mismatch");
    let n = a.first().map_or(0, Vec::len);
    if m == 0 {
        return Some(vec![Rational::zero(); n]);
    }
    // tableau rows: [A | I_m | b], b >= 0
    let width = n + m + 1;
    let mut t: Vec<Vector> = Vec::with_capacity(m + 1);
    for (i, (row, bi)) in a.iter().zip(b).enumerate() {
        assert_eq!(row.len(), n, "ragged constraint matrix");
        let flip = bi.is_negative();
        let mut r: Vector = row.iter().map(|v| if flip { -v } else { v.clone() }).collect();
        r.extend((0..m).map(|k| if k == i { Rational::one() } else { Rational::zero() }));
        r.push(if flip { -bi } else { bi.clone() });
        t.push(r);
    }
    // phase-one objective: minimize the sum of artificials, stored as reduced costs
    let mut obj: Vector = vec![Rational::zero(); width];
    for r in &t {
        for j in 0..n {
            obj[j] -= &r[j];
        }
        obj[width - 1] -= &r[width - 1];
    }
    let mut basis: Vec<usize> = (n..n + m).collect();

    while let Some(enter) = (0..n + m).find(|&j| obj[j].is_negative()) {
        let mut leave: Option<(usize, Rational)> = None;
        for (i, r) in t.iter().enumerate() {
            if r[enter].is_positive() {
                let ratio = &r[width - 1] / &r[enter];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let (row, _) = leave.expect("phase one objective is bounded below");
        pivot(&mut t, &mut obj, row, enter);
        basis[row] = enter;
    }

    if !obj[width - 1].is_zero() {
        return None;
    }
    let mut x = vec![Rational::zero(); n];
    for (i, &bv) in basis.iter().enumerate() {
        if bv < n {
            x[bv] = t[i][width - 1].clone();
        }
    }
    Some(x)
}

fn pivot(t: &mut [Vector], obj: &mut Vector, row: usize, col: usize) {
    let inv = t[row][col].recip();
    for v in t[row].iter_mut() {
        *v *= &inv;
    }
    let prow = t[row].clone();
    for (i, r) in t.iter_mut().enumerate() {
        if i != row && !r[col].is_zero() {
            let f = r[col].clone();
            for (v, p) in r.iter_mut().zip(&prow) {
                if !p.is_zero() {
                    *v -= &f * p;
                }
            }
        }
    }
    if !obj[col].is_zero() {
        let f = obj[col].clone();
        for (v, p) in obj.iter_mut().zip(&prow) {
            if !p.is_zero() {
                *v -= &f * p;
            }
        }
    }
}

/// Convex coefficients expressing `x` in terms of `points`, if `x` lies in
/// their convex hull.
pub fn convex_combination(points: &[Vector], x: &[Rational]) -> Option<Vector> {
    let d = x.len();
    let mut rows: Vec<Vector> = (0..d)
        .map(|k| points.iter().map(|p| p[k].clone()).collect())
        .collect();
    rows.push(vec![Rational::one(); points.len()]);
    let mut rhs: Vector = x.to_vec();
    rhs.push(Rational::one());
    lp_feasible(&rows, &rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::mat_vec;
    use crate::poly::{rat, rat_frac};
    use proptest::prelude::*;

    fn pts(v: &[&[i64]]) -> Vec<Vector> {
        v.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect()
    }

    #[test]
    fn midpoint_is_feasible() {
        let p = pts(&[&[0, 0], &[2, 2]]);
        let lam = convex_combination(&p, &[rat(1), rat(1)]).unwrap();
        assert_eq!(lam, vec![rat_frac(1, 2), rat_frac(1, 2)]);
    }

    #[test]
    fn off_segment_is_infeasible() {
        let p = pts(&[&[0, 0], &[2, 2]]);
        assert!(convex_combination(&p, &[rat(1), rat(0)]).is_none());
        assert!(convex_combination(&p, &[rat(3), rat(3)]).is_none());
    }

    #[test]
    fn square_center_in_triangle() {
        // square (0,0),(1,1),(1,0),(0,1); triangle on labels 1,2,3
        let tri = pts(&[&[0, 0], &[1, 1], &[1, 0]]);
        let lam = convex_combination(&tri, &[rat_frac(1, 2), rat_frac(1, 2)]).unwrap();
        assert_eq!(lam, vec![rat_frac(1, 2), rat_frac(1, 2), rat(0)]);
    }

    #[test]
    fn degenerate_systems() {
        assert!(lp_feasible(&pts(&[&[1, 1], &[1, 1]]), &[rat(1), rat(1)]).is_some());
        assert!(lp_feasible(&pts(&[&[1, 1], &[1, 1]]), &[rat(1), rat(2)]).is_none());
        assert!(lp_feasible(&pts(&[&[-1, -1]]), &[rat(1)]).is_none());
    }

    proptest! {
        #[test]
        fn witnesses_are_feasible(
            a in prop::collection::vec(prop::collection::vec(-3i64..4, 4), 1..4),
            x in prop::collection::vec(0i64..3, 4),
        ) {
            let a: Vec<Vector> = a.iter().map(|r| r.iter().map(|&v| rat(v)).collect()).collect();
            let x: Vector = x.iter().map(|&v| rat(v)).collect();
            let b = mat_vec(&a, &x);
            let sol = lp_feasible(&a, &b).expect("x itself is feasible");
            prop_assert!(sol.iter().all(|v| !v.is_negative()));
            prop_assert_eq!(mat_vec(&a, &sol), b);
        }
    }
}
