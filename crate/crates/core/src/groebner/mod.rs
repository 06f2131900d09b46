//! Ideals, reduced Gröbner bases and the ideal operations derived from them.

mod buchberger;
pub mod graded;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::poly::{parse_ideal_text, Monomial, MonomialOrder, Polynomial, Rational, Ring, WeightVector};
use buchberger::{from_ordered, reduce, reduced_basis, to_ordered, Terms};

pub use graded::GradedDims;

/// Reduced Gröbner basis: monic elements, sorted ascending by leading
/// monomial, no term of any element divisible by another leading monomial.
#[derive(Clone, Debug)]
pub struct ReducedGB {
    order: MonomialOrder,
    nvars: usize,
    ordered: Vec<Terms>,
    elements: Vec<Polynomial>,
}

impl ReducedGB {
    fn new(nvars: usize, order: MonomialOrder, ordered: Vec<Terms>) -> Self {
        let elements = ordered.iter().map(|t| from_ordered(nvars, t.clone())).collect();
        ReducedGB {
            order,
            nvars,
            ordered,
            elements,
        }
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn leading_monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.ordered.iter().map(|t| &t[0].0)
    }

    /// Elements as term lists sorted descending in the basis order, so the
    /// first term is the marked leading term.
    pub fn ordered_terms(&self) -> impl Iterator<Item = &[(Monomial, Rational)]> {
        self.ordered.iter().map(Vec::as_slice)
    }

    pub fn is_unit(&self) -> bool {
        self.ordered.len() == 1 && self.ordered[0][0].0.is_one()
    }

    /// Remainder of `p` on division by the basis.
    pub fn normal_form(&self, p: &Polynomial) -> Polynomial {
        assert_eq!(p.nvars(), self.nvars, "ring mismatch");
        let t = to_ordered(p, &self.order);
        from_ordered(self.nvars, reduce(t, self.ordered.iter(), &self.order))
    }

    pub fn reduces_to_zero(&self, p: &Polynomial) -> bool {
        self.normal_form(p).is_zero()
    }
}

/// Remainder of `p` on division by `gb`; zero iff `p` lies in the ideal.
pub fn normal_form(p: &Polynomial, gb: &ReducedGB) -> Polynomial {
    gb.normal_form(p)
}

type GbCell = Arc<OnceLock<Arc<ReducedGB>>>;

/// Ideal of a polynomial ring over the rationals, with reduced Gröbner
/// bases cached per monomial order. Concurrent requests for the same order
/// compute the basis once.
pub struct Ideal {
    ring: Arc<Ring>,
    generators: Vec<Polynomial>,
    cache: Mutex<HashMap<MonomialOrder, GbCell>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        Ideal {
            ring: self.ring.clone(),
            generators: self.generators.clone(),
            cache: Mutex::new(self.cache.lock().expect("gb cache poisoned").clone()),
        }
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal({self})")
    }
}

impl fmt::Display for Ideal {
    /// Generators whose first printed coefficient is negative are shown negated.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self
            .generators
            .iter()
            .map(|g| match g.terms().first() {
                Some((_, c)) if c.is_negative() => (-g).to_string_in(&self.ring),
                _ => g.to_string_in(&self.ring),
            })
            .collect();
        write!(f, "<{}>", gens.join(", "))
    }
}

impl Ideal {
    /// Zero generators are dropped. Panics if a generator lives in a
    /// different number of variables than `ring`.
    pub fn new(ring: impl Into<Arc<Ring>>, generators: Vec<Polynomial>) -> Self {
        let ring = ring.into();
        for g in &generators {
            assert_eq!(g.nvars(), ring.nvars(), "generator outside the ambient ring");
        }
        let generators = generators.into_iter().filter(|g| !g.is_zero()).collect();
        Ideal {
            ring,
            generators,
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn zero(ring: impl Into<Arc<Ring>>) -> Self {
        Ideal::new(ring, Vec::new())
    }

    pub fn unit(ring: impl Into<Arc<Ring>>) -> Self {
        let ring = ring.into();
        let n = ring.nvars();
        Ideal::new(ring, vec![Polynomial::one(n)])
    }

    /// Parses the ideal file format (see [`crate::poly::parse_ideal_text`]).
    pub fn parse(text: &str) -> Result<Self> {
        let (ring, gens) = parse_ideal_text(text)?;
        Ok(Ideal::new(ring, gens))
    }

    /// Parses generators over a fixed ring.
    pub fn parse_in(ring: impl Into<Arc<Ring>>, gens: &[&str]) -> Result<Self> {
        let ring = ring.into();
        let polys = gens
            .iter()
            .map(|g| crate::poly::parse_polynomial(g, &ring))
            .collect::<Result<Vec<_>>>()?;
        Ok(Ideal::new(ring, polys))
    }

    /// Ideal generated by the variables with the given indices.
    pub fn variables(ring: impl Into<Arc<Ring>>, vars: &[usize]) -> Self {
        let ring = ring.into();
        let n = ring.nvars();
        Ideal::new(ring, vars.iter().map(|&i| Polynomial::var(n, i)).collect())
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn with_generators(&self, generators: Vec<Polynomial>) -> Ideal {
        Ideal::new(self.ring.clone(), generators)
    }

    pub fn groebner(&self, order: &MonomialOrder) -> Arc<ReducedGB> {
        let cell = {
            let mut cache = self.cache.lock().expect("gb cache poisoned");
            cache.entry(order.clone()).or_default().clone()
        };
        cell.get_or_init(|| {
            let basis = reduced_basis(&self.generators, order);
            Arc::new(ReducedGB::new(self.nvars(), order.clone(), basis))
        })
        .clone()
    }

    /// The grevlex basis used for membership and equality.
    pub fn standard_basis(&self) -> Arc<ReducedGB> {
        self.groebner(&MonomialOrder::grevlex())
    }

    pub fn is_unit(&self) -> bool {
        self.generators.iter().any(Polynomial::is_unit) || self.standard_basis().is_unit()
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        p.is_zero() || self.standard_basis().reduces_to_zero(p)
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &Ideal) -> bool {
        self.check_same_ring(other);
        if other.is_zero() {
            return true;
        }
        let gb = self.standard_basis();
        other.generators.iter().all(|g| gb.reduces_to_zero(g))
    }

    /// Equality via the reduced grevlex bases.
    pub fn equals(&self, other: &Ideal) -> bool {
        self.check_same_ring(other);
        self.standard_basis().elements() == other.standard_basis().elements()
    }

    pub fn sum(&self, other: &Ideal) -> Ideal {
        self.check_same_ring(other);
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        self.with_generators(gens)
    }

    pub fn product(&self, other: &Ideal) -> Ideal {
        self.check_same_ring(other);
        let gens = self
            .generators
            .iter()
            .flat_map(|f| other.generators.iter().map(move |g| f * g))
            .collect();
        self.with_generators(gens)
    }

    fn check_same_ring(&self, other: &Ideal) {
        assert_eq!(self.nvars(), other.nvars(), "ideals live in different rings");
    }

    /// Homogeneous in the standard grading.
    pub fn is_homogeneous(&self) -> bool {
        self.generators.iter().all(Polynomial::is_standard_homogeneous)
            || self
                .standard_basis()
                .elements()
                .iter()
                .all(Polynomial::is_standard_homogeneous)
    }

    pub(crate) fn require_homogeneous(&self) -> Result<()> {
        if self.is_homogeneous() {
            Ok(())
        } else {
            Err(Error::Precondition(
                "ideal is not homogeneous in the standard grading".into(),
            ))
        }
    }

    /// All generators are monomials.
    pub fn is_monomial(&self) -> bool {
        self.generators.iter().all(Polynomial::is_monomial)
    }

    /// `in_w I` under the min convention, from the basis for the
    /// degree-refined `w` order with grevlex tie-break.
    pub fn initial_ideal(&self, w: &WeightVector) -> Result<Ideal> {
        w.check_len(self.nvars())?;
        self.require_homogeneous()?;
        let order = MonomialOrder::weighted(w.clone(), MonomialOrder::grevlex());
        let gb = self.groebner(&order);
        let gens = gb
            .elements()
            .iter()
            .map(|g| g.initial_form(w))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.with_generators(gens))
    }

    /// `I ∩ Q[x_e : e ∉ drop]`, expressed in the full ring.
    pub fn eliminate(&self, drop: &[usize]) -> Ideal {
        let mut keep = vec![true; self.nvars()];
        for &d in drop {
            keep[d] = false;
        }
        if self.generators.iter().all(|g| g.supported_on(&keep)) {
            return self.clone();
        }
        let order = MonomialOrder::elimination(self.nvars(), drop);
        let gb = self.groebner(&order);
        let gens = gb
            .elements()
            .iter()
            .filter(|g| g.supported_on(&keep))
            .cloned()
            .collect();
        self.with_generators(gens)
    }

    pub fn intersect(&self, other: &Ideal) -> Ideal {
        self.check_same_ring(other);
        if self.is_zero() || other.is_zero() {
            return Ideal::zero(self.ring.clone());
        }
        if self.is_monomial() && other.is_monomial() {
            return self.intersect_monomial(other);
        }
        let n = self.nvars();
        let t = Polynomial::var(n + 1, n);
        let one_minus_t = &Polynomial::one(n + 1) - &t;
        let mut gens: Vec<Polynomial> = self.generators.iter().map(|f| &f.extended(1) * &t).collect();
        gens.extend(other.generators.iter().map(|g| &g.extended(1) * &one_minus_t));
        let ring = self.ring.extended([self.ring.fresh_label("t")]);
        let lifted = Ideal::new(ring, gens);
        let order = MonomialOrder::elimination(n + 1, &[n]);
        let gb = lifted.groebner(&order);
        let gens = gb.elements().iter().filter_map(|g| g.truncated(n)).collect();
        self.with_generators(gens)
    }

    fn intersect_monomial(&self, other: &Ideal) -> Ideal {
        let n = self.nvars();
        let mut lcms: Vec<Monomial> = Vec::new();
        for f in &self.generators {
            for g in &other.generators {
                lcms.push(f.terms()[0].0.lcm(&g.terms()[0].0));
            }
        }
        lcms.sort();
        lcms.dedup();
        let minimal: Vec<Polynomial> = lcms
            .iter()
            .filter(|m| !lcms.iter().any(|d| d != *m && d.divides(m)))
            .map(|m| Polynomial::term(m.clone(), Rational::one()))
            .collect();
        debug_assert!(minimal.iter().all(|p| p.nvars() == n));
        self.with_generators(minimal)
    }

    /// Whether the ideal contains a monomial, via `I + <1 - t x_1...x_m>`
    /// being the unit ideal.
    pub fn contains_monomial(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        if self.generators.iter().any(Polynomial::is_monomial) {
            return true;
        }
        let n = self.nvars();
        let prod = vec![1u32; n + 1];
        let rab = &Polynomial::one(n + 1) - &Polynomial::term(Monomial::new(prod), Rational::one());
        let mut gens: Vec<Polynomial> = self.generators.iter().map(|g| g.extended(1)).collect();
        gens.push(rab);
        let ring = self.ring.extended([self.ring.fresh_label("t")]);
        Ideal::new(ring, gens).standard_basis().is_unit()
    }

    /// Dimensions of the graded pieces of the ideal in degrees `0..=max_degree`.
    pub fn graded_dimension(&self, max_degree: usize) -> Result<GradedDims> {
        self.require_homogeneous()?;
        let gb = self.standard_basis();
        let leads: Vec<Monomial> = gb.leading_monomials().cloned().collect();
        Ok(GradedDims::from_leading_monomials(self.nvars(), &leads, max_degree))
    }

    /// Sets `x_e := 0` for `e` outside `keep` in every generator.
    pub fn project(&self, keep: &[bool]) -> Ideal {
        self.with_generators(self.generators.iter().map(|g| g.project(keep)).collect())
    }

    /// Generators scaled to be monic under grevlex, for display.
    pub fn monic_generators(&self) -> Vec<Polynomial> {
        let o = MonomialOrder::grevlex();
        self.generators.iter().map(|g| g.monic(&o)).collect()
    }

    /// Generators of the reduced grevlex basis rendered as text.
    pub fn basis_strings(&self) -> Vec<String> {
        self.standard_basis()
            .elements()
            .iter()
            .map(|g| g.to_string_in(&self.ring))
            .collect()
    }
}

pub fn reduced_groebner(ideal: &Ideal, order: &MonomialOrder) -> Arc<ReducedGB> {
    ideal.groebner(order)
}

pub fn initial_ideal(ideal: &Ideal, w: &WeightVector) -> Result<Ideal> {
    ideal.initial_ideal(w)
}

pub fn ideal_equal(a: &Ideal, b: &Ideal) -> bool {
    a.equals(b)
}

pub fn eliminate(ideal: &Ideal, drop: &[usize]) -> Ideal {
    ideal.eliminate(drop)
}

pub fn intersect(a: &Ideal, b: &Ideal) -> Ideal {
    a.intersect(b)
}

/// Left fold of [`intersect`]; `None` for an empty list.
pub fn intersect_all<'a>(ideals: impl IntoIterator<Item = &'a Ideal>) -> Option<Ideal> {
    let mut it = ideals.into_iter();
    let first = it.next()?.clone();
    Some(it.fold(first, |acc, j| acc.intersect(j)))
}

pub fn graded_dimension(ideal: &Ideal, max_degree: usize) -> Result<GradedDims> {
    ideal.graded_dimension(max_degree)
}

pub fn contains_monomial(ideal: &Ideal) -> bool {
    ideal.contains_monomial()
}
