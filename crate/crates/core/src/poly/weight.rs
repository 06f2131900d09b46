use std::fmt;
use std::ops::{Add, Neg};

use num_traits::Zero;

use super::rational::{format_rational, parse_rational, rat, Rational};
use crate::error::{Error, Result};

/// Rational weight vector indexed by the variables of a ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightVector(Vec<Rational>);

impl WeightVector {
    pub fn new(entries: Vec<Rational>) -> Self {
        WeightVector(entries)
    }

    pub fn from_ints(entries: &[i64]) -> Self {
        WeightVector(entries.iter().map(|&v| rat(v)).collect())
    }

    pub fn zeros(n: usize) -> Self {
        WeightVector(vec![Rational::zero(); n])
    }

    pub fn ones(n: usize) -> Self {
        WeightVector(vec![rat(1); n])
    }

    /// Parses comma-separated rationals such as `0,0,1/2,-3`.
    pub fn parse_csv(s: &str) -> Result<Self> {
        s.split(',')
            .map(parse_rational)
            .collect::<Result<Vec<_>>>()
            .map(WeightVector)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.0
    }

    pub fn get(&self, i: usize) -> &Rational {
        &self.0[i]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        WeightVector(self.0.iter().map(|v| v * c).collect())
    }

    pub fn check_len(&self, n: usize) -> Result<()> {
        if self.0.len() == n {
            Ok(())
        } else {
            Err(Error::Dimension {
                expected: n,
                got: self.0.len(),
            })
        }
    }
}

impl Neg for &WeightVector {
    type Output = WeightVector;
    fn neg(self) -> WeightVector {
        WeightVector(self.0.iter().map(|v| -v).collect())
    }
}

impl Add for &WeightVector {
    type Output = WeightVector;
    fn add(self, other: &WeightVector) -> WeightVector {
        assert_eq!(self.len(), other.len(), "weight length mismatch");
        WeightVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(format_rational).collect();
        write!(f, "{}", parts.join(","))
    }
}
