//! Exact linear algebra over the rationals.
//!
//! Elimination runs on integer rows (each row scaled by the lcm of its
//! denominators) with fraction-free updates and content removal; the final
//! reduced row-echelon form is returned over the rationals so that equal row
//! spaces give structurally equal matrices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::poly::Rational;

pub type Vector = Vec<Rational>;

fn integer_row(row: &[Rational]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for v in row {
        lcm = lcm.lcm(v.denom());
    }
    row.iter().map(|v| v.numer() * (&lcm / v.denom())).collect()
}

fn remove_content(row: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for v in row.iter() {
        if !v.is_zero() {
            g = g.gcd(v);
            if g.is_one() {
                return;
            }
        }
    }
    if g > BigInt::one() {
        for v in row.iter_mut() {
            *v /= &g;
        }
    }
}

/// Reduced row-echelon form of the row space: nonzero rows only, each with
/// pivot 1. Also returns the pivot columns.
pub fn rref(rows: &[Vector], ncols: usize) -> (Vec<Vector>, Vec<usize>) {
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| {
            assert_eq!(r.len(), ncols, "row length mismatch");
            integer_row(r)
        })
        .collect();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        remove_content(&mut m[rank]);
        let prow = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r == rank || row[col].is_zero() {
                continue;
            }
            let a = prow[col].clone();
            let b = row[col].clone();
            for k in 0..ncols {
                let v = &row[k] * &a - &prow[k] * &b;
                row[k] = v;
            }
            remove_content(row);
        }
        pivots.push(col);
        rank += 1;
    }
    let out = m[..rank]
        .iter()
        .zip(&pivots)
        .map(|(row, &pc)| {
            let piv = row[pc].clone();
            row.iter()
                .map(|v| Rational::new(v.clone(), piv.clone()))
                .collect()
        })
        .collect();
    (out, pivots)
}

pub fn rank(rows: &[Vector], ncols: usize) -> usize {
    rref(rows, ncols).1.len()
}

/// Basis of `{x : rows * x = 0}`, one vector per free column.
pub fn kernel(rows: &[Vector], ncols: usize) -> Vec<Vector> {
    let (r, pivots) = rref(rows, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); ncols];
            v[f] = Rational::one();
            for (row, &pc) in r.iter().zip(&pivots) {
                v[pc] = -row[f].clone();
            }
            v
        })
        .collect()
}

/// Canonical basis (RREF rows) of the span of `vectors`.
pub fn span_basis(vectors: &[Vector], dim: usize) -> Vec<Vector> {
    rref(vectors, dim).0
}

pub fn same_span(a: &[Vector], b: &[Vector], dim: usize) -> bool {
    span_basis(a, dim) == span_basis(b, dim)
}

pub fn in_span(v: &Vector, basis: &[Vector]) -> bool {
    let dim = v.len();
    let mut with = basis.to_vec();
    with.push(v.clone());
    rank(&with, dim) == rank(basis, dim)
}

pub fn transpose(rows: &[Vector], ncols: usize) -> Vec<Vector> {
    (0..ncols).map(|c| rows.iter().map(|r| r[c].clone()).collect()).collect()
}

pub fn mat_vec(rows: &[Vector], x: &[Rational]) -> Vector {
    rows.iter().map(|r| dot(r, x)).collect()
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .map(|(x, y)| x * y)
        .fold(Rational::zero(), |acc, v| acc + v)
}

pub fn mat_mul(a: &[Vector], b: &[Vector], bcols: usize) -> Vec<Vector> {
    let bt = transpose(b, bcols);
    a.iter().map(|r| bt.iter().map(|c| dot(r, c)).collect()).collect()
}

/// Unique solution of the square system `a x = b`, if `a` is invertible.
pub fn solve(a: &[Vector], b: &[Rational]) -> Option<Vector> {
    let n = a.len();
    let aug: Vec<Vector> = a
        .iter()
        .zip(b)
        .map(|(r, bi)| {
            let mut r = r.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let (r, pivots) = rref(&aug, n + 1);
    if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
        return None;
    }
    Some(r.iter().map(|row| row[n].clone()).collect())
}

/// Inverse of a square matrix.
pub fn inverse(a: &[Vector]) -> Option<Vec<Vector>> {
    let n = a.len();
    let aug: Vec<Vector> = a
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut r = r.clone();
            r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            r
        })
        .collect();
    let (r, pivots) = rref(&aug, 2 * n);
    if pivots.len() < n || pivots[..n].iter().enumerate().any(|(i, &p)| p != i) {
        return None;
    }
    Some(r.iter().map(|row| row[n..].to_vec()).collect())
}

/// Indices of a maximal linearly independent subset of `rows`, chosen greedily.
pub fn independent_rows(rows: &[Vector], ncols: usize) -> Vec<usize> {
    let mut chosen: Vec<usize> = Vec::new();
    let mut basis: Vec<Vector> = Vec::new();
    for (i, r) in rows.iter().enumerate() {
        let mut trial = basis.clone();
        trial.push(r.clone());
        if rank(&trial, ncols) > basis.len() {
            basis = rref(&trial, ncols).0;
            chosen.push(i);
        }
    }
    chosen
}

pub fn is_zero_vector(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// Scales a vector by a positive factor so that its entries are coprime integers.
pub fn primitive(v: &[Rational]) -> Vec<BigInt> {
    let mut ints = integer_row(v);
    remove_content(&mut ints);
    ints
}

pub fn sign_of(v: &Rational) -> i8 {
    if v.is_positive() {
        1
    } else if v.is_negative() {
        -1
    } else {
        0
    }
}
