//! Point configurations and their lineality spaces.
//!
//! A configuration `A = (a_e)` determines the subspace `L(A)` of functions
//! `E -> Q` that are restrictions of affine functions; two configurations on
//! the same labels are affinely equivalent exactly when these subspaces agree.
//! For a homogeneous ideal `I` the subspace `L(I)` of weights fixing `I` is
//! read off a reduced Gröbner basis, and `A(I)` is a configuration whose
//! `L`-space is `L(I)`.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::linalg::{self, Vector};
use crate::poly::{rat, Rational};

/// Labeled list of rational points. Coincident points are allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointConfiguration {
    labels: Vec<String>,
    points: Vec<Vector>,
    dim: usize,
}

impl PointConfiguration {
    pub fn new(labels: Vec<String>, points: Vec<Vector>) -> Result<Self> {
        if labels.len() != points.len() {
            return Err(Error::Dimension {
                expected: labels.len(),
                got: points.len(),
            });
        }
        let dim = points.first().map_or(0, Vec::len);
        for p in &points {
            if p.len() != dim {
                return Err(Error::Dimension {
                    expected: dim,
                    got: p.len(),
                });
            }
        }
        Ok(PointConfiguration { labels, points, dim })
    }

    /// Integer points labeled `1..=n`.
    pub fn from_ints(points: &[&[i64]]) -> Self {
        let labels = (1..=points.len()).map(|i| i.to_string()).collect();
        let pts = points.iter().map(|p| p.iter().map(|&v| rat(v)).collect()).collect();
        PointConfiguration::new(labels, pts).expect("rectangular input")
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn points(&self) -> &[Vector] {
        &self.points
    }

    pub fn point(&self, e: usize) -> &Vector {
        &self.points[e]
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Ambient coordinate dimension.
    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    /// Rows `(1, a_e)`.
    pub fn homogenized(&self) -> Vec<Vector> {
        self.points
            .iter()
            .map(|p| {
                let mut r = Vec::with_capacity(p.len() + 1);
                r.push(Rational::one());
                r.extend(p.iter().cloned());
                r
            })
            .collect()
    }

    /// Dimension of the affine span; `-1` is never returned since a
    /// nonempty configuration has dimension at least 0.
    pub fn affine_dim(&self) -> usize {
        linalg::rank(&self.homogenized(), self.dim + 1).saturating_sub(1)
    }
}

/// Linearly independent spanning set of a subspace of `Q^E`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceBasis {
    ambient: usize,
    vectors: Vec<Vector>,
}

impl SubspaceBasis {
    /// Takes any spanning set and keeps an independent subset of it.
    pub fn new(ambient: usize, spanning: Vec<Vector>) -> Self {
        let keep = linalg::independent_rows(&spanning, ambient);
        let vectors = keep.into_iter().map(|i| spanning[i].clone()).collect();
        SubspaceBasis { ambient, vectors }
    }

    pub fn full(ambient: usize) -> Self {
        let vectors = (0..ambient)
            .map(|i| (0..ambient).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect())
            .collect();
        SubspaceBasis { ambient, vectors }
    }

    pub fn vectors(&self) -> &[Vector] {
        &self.vectors
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// Canonical reduced row-echelon basis.
    pub fn canonical(&self) -> Vec<Vector> {
        linalg::span_basis(&self.vectors, self.ambient)
    }

    pub fn same_span(&self, other: &SubspaceBasis) -> bool {
        self.ambient == other.ambient && self.canonical() == other.canonical()
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        linalg::in_span(&v.to_vec(), &self.vectors)
    }

    pub fn contains_ones(&self) -> bool {
        self.contains(&vec![Rational::one(); self.ambient])
    }
}

/// Matrix whose kernel is `L(I)`: a row `v_lead - v` for every reduced
/// grevlex basis element and each of its non-leading exponent vectors.
pub fn lineality_matrix(ideal: &Ideal) -> Vec<Vector> {
    let n = ideal.nvars();
    let gb = ideal.standard_basis();
    let mut rows = Vec::new();
    for g in gb.ordered_terms() {
        let lead = g[0].0.exponents();
        for (m, _) in &g[1..] {
            rows.push(
                lead.iter()
                    .zip(m.exponents())
                    .map(|(a, b)| rat(i64::from(*a) - i64::from(*b)))
                    .collect::<Vector>(),
            );
        }
    }
    debug_assert!(rows.iter().all(|r| r.len() == n));
    rows
}

fn check_ideal(ideal: &Ideal) -> Result<()> {
    ideal.require_homogeneous()?;
    if ideal.is_unit() {
        return Err(Error::Precondition("the unit ideal has no point configuration".into()));
    }
    Ok(())
}

/// `L(I)`: the weights `w` with `in_w I = I`.
pub fn lineality_space(ideal: &Ideal) -> Result<SubspaceBasis> {
    check_ideal(ideal)?;
    let n = ideal.nvars();
    if ideal.is_zero() {
        return Ok(SubspaceBasis::full(n));
    }
    let rows = lineality_matrix(ideal);
    Ok(SubspaceBasis {
        ambient: n,
        vectors: linalg::kernel(&rows, n),
    })
}

/// `A(I)`: row `e` of the matrix whose columns are the kernel basis of
/// [`lineality_matrix`], labeled by the ring's variables.
pub fn point_configuration_of_ideal(ideal: &Ideal) -> Result<PointConfiguration> {
    let basis = lineality_space(ideal)?;
    let n = ideal.nvars();
    let points = (0..n)
        .map(|e| basis.vectors().iter().map(|v| v[e].clone()).collect())
        .collect();
    PointConfiguration::new(ideal.ring().labels().to_vec(), points)
}

/// `L(A)`: the column space of `[1 | A]`.
pub fn lineality_of_config(config: &PointConfiguration) -> SubspaceBasis {
    let cols = linalg::transpose(&config.homogenized(), config.ambient_dim() + 1);
    SubspaceBasis::new(config.len(), cols)
}

pub fn affine_equivalent(a: &PointConfiguration, b: &PointConfiguration) -> Result<bool> {
    if a.labels != b.labels {
        return Err(Error::Precondition("configurations carry different labels".into()));
    }
    Ok(lineality_of_config(a).same_span(&lineality_of_config(b)))
}

/// The configuration of orthogonal projections `pi_L(e_i)` of the standard
/// basis vectors onto `L`, a configuration whose `L`-space is `L`.
pub fn orthogonal_projection_config(l: &SubspaceBasis, labels: &[String]) -> Result<PointConfiguration> {
    let n = l.ambient();
    if labels.len() != n {
        return Err(Error::Dimension {
            expected: n,
            got: labels.len(),
        });
    }
    if !l.contains_ones() {
        return Err(Error::Precondition("the all-ones vector is not in the subspace".into()));
    }
    let b = l.vectors();
    let k = b.len();
    // P = B^T (B B^T)^{-1} B with B the k x n matrix of basis rows
    let gram = linalg::mat_mul(b, &linalg::transpose(b, n), k);
    let gram_inv = linalg::inverse(&gram).expect("basis vectors are independent");
    let coeffs = linalg::mat_mul(&gram_inv, b, n); // k x n
    let points = (0..n)
        .map(|e| {
            (0..n)
                .map(|j| (0..k).map(|r| &b[r][e] * &coeffs[r][j]).fold(Rational::zero(), |a, v| a + v))
                .collect()
        })
        .collect();
    PointConfiguration::new(labels.to_vec(), points)
}
