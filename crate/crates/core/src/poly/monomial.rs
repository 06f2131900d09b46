use std::fmt;

use num_bigint::BigInt;

use super::rational::Rational;
use super::weight::WeightVector;
use crate::error::Result;

/// Exponent vector of a monomial. The derived `Ord` is lexicographic on the
/// exponents and only serves as the canonical storage order of polynomials;
/// use [`super::MonomialOrder`] for term orders.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, provided `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| b.checked_sub(*a))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// `sum_e w_e * m_e`.
    pub fn weight_degree(&self, w: &WeightVector) -> Result<Rational> {
        w.check_len(self.nvars())?;
        let mut acc = Rational::from_integer(BigInt::from(0));
        for (e, wi) in self.0.iter().zip(w.entries()) {
            if *e != 0 {
                acc += wi * Rational::from_integer(BigInt::from(*e));
            }
        }
        Ok(acc)
    }

    pub fn extended(&self, extra: usize) -> Monomial {
        let mut e = self.0.clone();
        e.resize(self.0.len() + extra, 0);
        Monomial(e)
    }

    /// Drops the trailing variables beyond `n`; `None` if any of them occurs.
    pub fn truncated(&self, n: usize) -> Option<Monomial> {
        if self.0[n..].iter().any(|&e| e != 0) {
            None
        } else {
            Some(Monomial(self.0[..n].to_vec()))
        }
    }

    /// True if every variable with nonzero exponent is flagged in `vars`.
    pub fn supported_on(&self, vars: &[bool]) -> bool {
        self.0.iter().zip(vars).all(|(e, keep)| *e == 0 || *keep)
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, e)| **e != 0)
            .map(|(i, _)| i)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, e) in self.0.iter().enumerate() {
            if *e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}
