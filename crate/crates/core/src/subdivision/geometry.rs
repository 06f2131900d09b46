//! Coordinates in which the subdivision computations run.
//!
//! Every point is replaced by its homogenization `(1, a_e)` written in a
//! basis of the span of all homogenized points, so affine functionals on the
//! configuration become plain dot products in `Q^r`, `r = dim A + 1`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::config::PointConfiguration;
use crate::linalg::{self, Vector};
use crate::poly::{Rational, WeightVector};

use super::Cell;

/// An affinely independent spanning subset `S` and the affine coordinates
/// of every point with respect to it, scaled to integers.
#[derive(Clone, Debug)]
struct Frame {
    subset: Vec<usize>,
    denom: BigInt,
    numer: Vec<Vec<BigInt>>,
    small: Option<(i64, Vec<i64>)>,
}

const SMALL: u64 = 1 << 40;

impl Frame {
    fn new(subset: Vec<usize>, lambda: Vec<Vector>) -> Frame {
        let mut denom = BigInt::one();
        for row in &lambda {
            for v in row {
                denom = denom.lcm(v.denom());
            }
        }
        let numer: Vec<Vec<BigInt>> = lambda
            .iter()
            .map(|row| row.iter().map(|v| v.numer() * (&denom / v.denom())).collect())
            .collect();
        let fits = |b: &BigInt| b.to_i64().filter(|x| x.unsigned_abs() < SMALL);
        let small = fits(&denom).zip(numer.iter().flatten().map(fits).collect::<Option<Vec<i64>>>());
        Frame {
            subset,
            denom,
            numer,
            small,
        }
    }

    /// Zero set of `h_e = w_e - sum_s lambda_{e,s} w_s` if `h >= 0`.
    fn lower_face(&self, w: &IntWeights) -> Option<Cell> {
        let r = self.subset.len();
        let mut zeros = Vec::new();
        match (w, &self.small) {
            (IntWeights::Small(w), Some((d, flat))) => {
                let ws: Vec<i128> = self.subset.iter().map(|&s| w[s] as i128).collect();
                for (e, we) in w.iter().enumerate() {
                    let row = &flat[e * r..(e + 1) * r];
                    let h = *d as i128 * *we as i128
                        - row.iter().zip(&ws).map(|(a, b)| *a as i128 * b).sum::<i128>();
                    if h < 0 {
                        return None;
                    }
                    if h == 0 {
                        zeros.push(e);
                    }
                }
            }
            _ => {
                let wb = w.to_big();
                let ws: Vec<&BigInt> = self.subset.iter().map(|&s| &wb[s]).collect();
                for (e, we) in wb.iter().enumerate() {
                    let mut h = &self.denom * we;
                    for (a, b) in self.numer[e].iter().zip(&ws) {
                        h -= a * *b;
                    }
                    if h.is_negative() {
                        return None;
                    }
                    if h.is_zero() {
                        zeros.push(e);
                    }
                }
            }
        }
        Some(Cell::new(zeros))
    }
}

/// Positive integer multiple of a rational weight vector.
pub(crate) enum IntWeights {
    Small(Vec<i64>),
    Big(Vec<BigInt>),
}

impl IntWeights {
    pub(crate) fn new(w: &WeightVector) -> Self {
        let mut lcm = BigInt::one();
        for v in w.entries() {
            lcm = lcm.lcm(v.denom());
        }
        let ints: Vec<BigInt> = w.entries().iter().map(|v| v.numer() * (&lcm / v.denom())).collect();
        match ints
            .iter()
            .map(|b| b.to_i64().filter(|x| x.unsigned_abs() < SMALL))
            .collect::<Option<Vec<i64>>>()
        {
            Some(s) => IntWeights::Small(s),
            None => IntWeights::Big(ints),
        }
    }

    fn to_big(&self) -> Vec<BigInt> {
        match self {
            IntWeights::Small(v) => v.iter().map(|&x| BigInt::from(x)).collect(),
            IntWeights::Big(v) => v.clone(),
        }
    }
}

/// Precomputed geometry of a point configuration.
#[derive(Clone, Debug)]
pub struct Geometry {
    n: usize,
    rank: usize,
    coords: Vec<Vector>,
    frames: Vec<Frame>,
}

pub(crate) fn combinations(n: usize, k: usize, f: &mut impl FnMut(&[usize])) {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in start..=n - (k - cur.len()) {
            cur.push(i);
            rec(i + 1, n, k, cur, f);
            cur.pop();
        }
    }
    if k > n {
        return;
    }
    rec(0, n, k, &mut Vec::with_capacity(k), f);
}

pub(crate) fn for_each_subset(items: &[usize], k: usize, f: &mut impl FnMut(&[usize])) {
    combinations(items.len(), k, &mut |idx| {
        let sub: Vec<usize> = idx.iter().map(|&i| items[i]).collect();
        f(&sub);
    });
}

/// Coordinates of `rows` with respect to the independent rows `basis_idx`
/// of the same matrix (all rows must lie in their span).
fn coordinates(rows: &[Vector], basis_idx: &[usize]) -> Vec<Vector> {
    let ncols = rows.first().map_or(0, Vec::len);
    let basis: Vec<Vector> = basis_idx.iter().map(|&i| rows[i].clone()).collect();
    // columns of `basis` where it is invertible
    let (_, cols) = linalg::rref(&basis, ncols);
    let square: Vec<Vector> = basis.iter().map(|r| cols.iter().map(|&c| r[c].clone()).collect()).collect();
    let inv = linalg::inverse(&square).expect("independent rows");
    rows.iter()
        .map(|r| {
            let sub: Vec<Rational> = cols.iter().map(|&c| r[c].clone()).collect();
            (0..basis.len())
                .map(|j| (0..basis.len()).map(|i| &sub[i] * &inv[i][j]).fold(Rational::zero(), |a, v| a + v))
                .collect()
        })
        .collect()
}

impl Geometry {
    pub fn new(config: &PointConfiguration) -> Geometry {
        let hom = config.homogenized();
        let n = hom.len();
        let basis_idx = linalg::independent_rows(&hom, config.ambient_dim() + 1);
        let rank = basis_idx.len();
        let coords = if n == 0 { Vec::new() } else { coordinates(&hom, &basis_idx) };
        let mut frames = Vec::new();
        combinations(n, rank, &mut |s| {
            let m: Vec<Vector> = s.iter().map(|&i| coords[i].clone()).collect();
            if let Some(inv) = linalg::inverse(&m) {
                let lambda = linalg::mat_mul(&coords, &inv, rank);
                frames.push(Frame::new(s.to_vec(), lambda));
            }
        });
        Geometry {
            n,
            rank,
            coords,
            frames,
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// `dim A + 1`.
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn coords(&self, e: usize) -> &Vector {
        &self.coords[e]
    }

    pub fn rank_of(&self, cell: &[usize]) -> usize {
        let rows: Vec<Vector> = cell.iter().map(|&e| self.coords[e].clone()).collect();
        linalg::rank(&rows, self.rank)
    }

    /// Maximal cells of the regular subdivision induced by `w` (min
    /// convention), sorted.
    pub fn maximal_cells(&self, w: &WeightVector) -> Vec<Cell> {
        assert_eq!(w.len(), self.n, "weight length mismatch");
        let iw = IntWeights::new(w);
        let mut cells: Vec<Cell> = self.frames.iter().filter_map(|f| f.lower_face(&iw)).collect();
        cells.sort();
        cells.dedup();
        cells
    }

    /// Facets of the subconfiguration on `cell`.
    pub fn facets(&self, cell: &Cell) -> Vec<Cell> {
        let members = cell.members();
        let rows: Vec<Vector> = members.iter().map(|&e| self.coords[e].clone()).collect();
        let basis_idx = linalg::independent_rows(&rows, self.rank);
        let k1 = basis_idx.len();
        if k1 <= 1 {
            return Vec::new();
        }
        let local = coordinates(&rows, &basis_idx);
        let positions: Vec<usize> = (0..members.len()).collect();
        let mut out: Vec<Cell> = Vec::new();
        for_each_subset(&positions, k1 - 1, &mut |t| {
            let sub: Vec<Vector> = t.iter().map(|&i| local[i].clone()).collect();
            let ker = linalg::kernel(&sub, k1);
            if ker.len() != 1 {
                return;
            }
            let psi = &ker[0];
            let vals: Vec<Rational> = local.iter().map(|v| linalg::dot(psi, v)).collect();
            let pos = vals.iter().any(Signed::is_positive);
            let neg = vals.iter().any(Signed::is_negative);
            if pos && neg {
                return;
            }
            let face: Vec<usize> = vals
                .iter()
                .enumerate()
                .filter(|(_, v)| v.is_zero())
                .map(|(i, _)| members[i])
                .collect();
            let face = Cell::new(face);
            if !out.contains(&face) {
                out.push(face);
            }
        });
        out.sort();
        out
    }

    /// A codimension-one cell is interior unless a functional vanishing on it
    /// supports the whole configuration.
    pub fn is_interior_ridge(&self, cell: &Cell) -> bool {
        let rows: Vec<Vector> = cell.members().iter().map(|&e| self.coords[e].clone()).collect();
        let ker = linalg::kernel(&rows, self.rank);
        if ker.len() != 1 {
            return false;
        }
        let psi = &ker[0];
        let vals: Vec<Rational> = self.coords.iter().map(|v| linalg::dot(psi, v)).collect();
        vals.iter().any(Signed::is_positive) && vals.iter().any(Signed::is_negative)
    }

    /// Whether the point of label `e` lies in the convex hull of `cell`.
    pub fn hull_contains(&self, cell: &Cell, e: usize) -> bool {
        let pts: Vec<Vector> = cell.members().iter().map(|&c| self.coords[c].clone()).collect();
        crate::lp::convex_combination(&pts, &self.coords[e]).is_some()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn combinations_count() {
        let mut c = 0;
        combinations(6, 3, &mut |_| c += 1);
        assert_eq!(c, 20);
        let mut c0 = 0;
        combinations(3, 0, &mut |_| c0 += 1);
        assert_eq!(c0, 1);
    }

    #[test]
    fn coincident_points_have_rank_one() {
        let g = Geometry::new(&PointConfiguration::from_ints(&[&[3], &[3]]));
        assert_eq!(g.rank(), 1);
        assert_eq!(g.coords(0), g.coords(1));
    }
}
