use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::monomial::Monomial;
use super::order::MonomialOrder;
use super::rational::{format_rational, is_unit_magnitude, Rational};
use super::ring::Ring;
use super::weight::WeightVector;
use crate::error::{Error, Result};

/// Sparse polynomial with rational coefficients.
///
/// Terms are stored in descending canonical (lexicographic exponent) order
/// with no zero coefficients, so equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: Vec<(Monomial, Rational)>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: Vec::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::term(Monomial::one(nvars), c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::term(Monomial::var(nvars, i), Rational::one())
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let nvars = m.nvars();
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        Polynomial { nvars, terms }
    }

    /// Builds a polynomial from arbitrary terms, merging duplicates.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut terms: Vec<(Monomial, Rational)> = terms.into_iter().collect();
        for (m, _) in &terms {
            assert_eq!(m.nvars(), nvars, "monomial arity mismatch");
        }
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        let mut out: Vec<(Monomial, Rational)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += c,
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Polynomial { nvars, terms: out }
    }

    /// Terms already sorted descending in canonical order with nonzero
    /// coefficients and distinct monomials.
    pub(crate) fn from_sorted_terms(nvars: usize, terms: Vec<(Monomial, Rational)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        Polynomial { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Rational)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms
            .binary_search_by(|(t, _)| m.cmp(t))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| Rational::zero())
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.iter().map(|(m, _)| m)
    }

    /// Largest total degree of a term; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    /// Multiplication by a monomial preserves the canonical order.
    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(t, a)| (t.mul(m), a.clone())).collect(),
        }
    }

    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Monomial, &Rational)> {
        self.terms
            .iter()
            .max_by(|a, b| order.compare(&a.0, &b.0))
            .map(|(m, c)| (m, c))
    }

    /// Divides by the leading coefficient under `order`.
    pub fn monic(&self, order: &MonomialOrder) -> Polynomial {
        match self.leading_term(order) {
            Some((_, c)) => {
                let inv = c.recip();
                self.scale(&inv)
            }
            None => self.clone(),
        }
    }

    /// `true` iff every term has the same `w`-degree (vacuous for zero).
    pub fn is_homogeneous(&self, w: &WeightVector) -> bool {
        assert_eq!(w.len(), self.nvars, "weight length mismatch");
        let mut degs = self.terms.iter().map(|(m, _)| m.weight_degree(w).expect("length checked"));
        match degs.next() {
            None => true,
            Some(d0) => degs.all(|d| d == d0),
        }
    }

    /// Homogeneous in the standard grading.
    pub fn is_standard_homogeneous(&self) -> bool {
        let mut degs = self.terms.iter().map(|(m, _)| m.degree());
        match degs.next() {
            None => true,
            Some(d0) => degs.all(|d| d == d0),
        }
    }

    /// Sum of the terms of minimal `w`-degree.
    pub fn initial_form(&self, w: &WeightVector) -> Result<Polynomial> {
        w.check_len(self.nvars)?;
        if self.is_zero() {
            return Err(Error::Undefined("initial form of the zero polynomial".into()));
        }
        let degs: Vec<Rational> = self
            .terms
            .iter()
            .map(|(m, _)| m.weight_degree(w))
            .collect::<Result<_>>()?;
        let min = degs.iter().min().expect("nonzero polynomial").clone();
        let terms = self
            .terms
            .iter()
            .zip(&degs)
            .filter(|(_, d)| **d == min)
            .map(|(t, _)| t.clone())
            .collect();
        Ok(Polynomial::from_sorted_terms(self.nvars, terms))
    }

    /// Sets `x_e := 0` for every variable with `keep[e] == false`.
    pub fn project(&self, keep: &[bool]) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.supported_on(keep))
                .cloned()
                .collect(),
        }
    }

    /// True if only variables flagged in `vars` occur.
    pub fn supported_on(&self, vars: &[bool]) -> bool {
        self.terms.iter().all(|(m, _)| m.supported_on(vars))
    }

    /// Variables occurring in some term.
    pub fn support(&self) -> Vec<bool> {
        let mut s = vec![false; self.nvars];
        for (m, _) in &self.terms {
            for i in m.support() {
                s[i] = true;
            }
        }
        s
    }

    /// Embeds into a ring with `extra` new trailing variables.
    pub fn extended(&self, extra: usize) -> Polynomial {
        Polynomial {
            nvars: self.nvars + extra,
            terms: self.terms.iter().map(|(m, c)| (m.extended(extra), c.clone())).collect(),
        }
    }

    /// Restricts to the first `n` variables; `None` if a later one occurs.
    pub fn truncated(&self, n: usize) -> Option<Polynomial> {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| m.truncated(n).map(|m| (m, c.clone())))
            .collect::<Option<Vec<_>>>()?;
        Some(Polynomial::from_terms(n, terms))
    }

    /// Applies a variable renaming `i -> map[i]` into a ring of `nvars` variables.
    pub fn remapped(&self, map: &[usize], nvars: usize) -> Polynomial {
        Polynomial::from_terms(
            nvars,
            self.terms.iter().map(|(m, c)| {
                let mut e = vec![0; nvars];
                for (i, x) in m.exponents().iter().enumerate() {
                    e[map[i]] += x;
                }
                (Monomial::new(e), c.clone())
            }),
        )
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.nvars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Renders with the variable names of `ring`.
    pub fn to_string_in(&self, ring: &Ring) -> String {
        let names: Vec<String> = (0..self.nvars.min(ring.nvars())).map(|i| ring.var_name(i)).collect();
        self.render(|i| {
            names
                .get(i)
                .cloned()
                .unwrap_or_else(|| format!("x{}", i + 1))
        })
    }

    fn render(&self, name: impl Fn(usize) -> String) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let abs = c.abs();
            let mut factors = Vec::new();
            if !is_unit_magnitude(&abs) || m.is_one() {
                factors.push(format_rational(&abs));
            }
            for (i, e) in m.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(name(i)),
                    _ => factors.push(format!("{}^{}", name(i), e)),
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

fn merge(a: &[(Monomial, Rational)], b: &[(Monomial, Rational)], negate_b: bool) -> Vec<(Monomial, Rational)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let sign = |c: &Rational| if negate_b { -c } else { c.clone() };
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((b[j].0.clone(), sign(&b[j].1)));
                j += 1;
            }
            Ordering::Equal => {
                let c = &a[i].1 + sign(&b[j].1);
                if !c.is_zero() {
                    out.push((a[i].0.clone(), c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend(b[j..].iter().map(|(m, c)| (m.clone(), sign(c))));
    out
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "ring mismatch");
        Polynomial::from_sorted_terms(self.nvars, merge(&self.terms, &rhs.terms, false))
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "ring mismatch");
        Polynomial::from_sorted_terms(self.nvars, merge(&self.terms, &rhs.terms, true))
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "ring mismatch");
        let mut acc = Polynomial::zero(self.nvars);
        for (m, c) in &rhs.terms {
            let part = self.mul_monomial(m).scale(c);
            acc = &acc + &part;
        }
        acc
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(|i| format!("x{}", i + 1)))
    }
}
