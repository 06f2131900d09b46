//! Lower and upper bounds on initial ideals.
//!
//! For a homogeneous ideal `I` and a weight `w`, let `Θ = subd_w A(I)` and
//! `Θ* = subd_{-w} A(I)`. Then
//!
//! ```text
//! I_w = Σ_{Δ ∈ Θ maximal} <ρ_Δ(I)>  ⊆  in_w I  ⊆  I^w = ⋂_{Δ ∈ Θ* maximal} (I ∩ Q[Δ]) + <x_e : e ∉ Δ>
//! ```
//!
//! where `ρ_Δ` sets the variables outside `Δ` to zero. [`BoundsContext`]
//! caches `A(I)` and its geometry so many weights can be processed against
//! one ideal.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::config::{point_configuration_of_ideal, PointConfiguration};
use crate::error::{Error, Result};
use crate::groebner::graded::{for_each_monomial, monomial_count};
use crate::groebner::{intersect_all, Ideal};
use crate::linalg::{self, Vector};
use crate::poly::{Monomial, MonomialOrder, Polynomial, Rational, WeightVector};
use crate::subdivision::{
    adjacency_graph_with, kappa_cells_with, regular_subdivision_with, Cell, Geometry, Signature, Subdivision,
};

/// `ρ_c(I)`: generators with the variables outside `c` set to zero.
pub fn project_ideal(ideal: &Ideal, cell: &Cell) -> Ideal {
    ideal.project(&cell.mask(ideal.nvars()))
}

/// `I^c = I ∩ Q[c]`.
pub fn restrict_ideal(ideal: &Ideal, cell: &Cell) -> Ideal {
    ideal.eliminate(&cell.complement(ideal.nvars()))
}

/// `Ĩ^c = I^c + <x_e : e ∉ c>`.
pub fn lifted_restriction(ideal: &Ideal, cell: &Cell) -> Ideal {
    lift(&restrict_ideal(ideal, cell), cell)
}

fn lift(restricted: &Ideal, cell: &Cell) -> Ideal {
    let n = restricted.nvars();
    restricted.sum(&Ideal::variables(restricted.ring().clone(), &cell.complement(n)))
}

/// Sum of `ρ_Δ(I)` over the given cells.
pub fn sum_of_projections<'a>(ideal: &Ideal, cells: impl IntoIterator<Item = &'a Cell>) -> Ideal {
    let order = MonomialOrder::grevlex();
    let mut gens: Vec<Polynomial> = Vec::new();
    for c in cells {
        for g in project_ideal(ideal, c).generators() {
            let g = g.monic(&order);
            if !gens.contains(&g) {
                gens.push(g);
            }
        }
    }
    ideal.with_generators(gens)
}

/// All data of the sandwich `I_w ⊆ in_w I ⊆ I^w` for one weight.
#[derive(Clone, Debug)]
pub struct SandwichReport {
    pub w: WeightVector,
    pub lower: Ideal,
    pub initial: Ideal,
    pub upper: Ideal,
    pub lower_exact: bool,
    pub upper_exact: bool,
    pub theta: Subdivision,
    pub theta_star: Subdivision,
}

/// Dimensions compared by [`BoundsContext::verify_limit_decomposition`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LimitCheck {
    pub degree: u32,
    /// Compatible tuples over the maximal and interior ridge cells of `Θ*`.
    pub limit_dim: usize,
    /// `dim (S / I^w)_d`.
    pub quotient_dim: usize,
}

impl LimitCheck {
    pub fn holds(&self) -> bool {
        self.limit_dim == self.quotient_dim
    }
}

/// An ideal together with its point configuration `A(I)`.
pub struct BoundsContext {
    ideal: Ideal,
    config: PointConfiguration,
    geom: Geometry,
    restrictions: Mutex<HashMap<Cell, Arc<Ideal>>>,
}

impl BoundsContext {
    pub fn new(ideal: &Ideal) -> Result<Self> {
        ideal.require_homogeneous()?;
        let config = point_configuration_of_ideal(ideal)?;
        let geom = Geometry::new(&config);
        Ok(BoundsContext {
            ideal: ideal.clone(),
            config,
            geom,
            restrictions: Mutex::new(HashMap::new()),
        })
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn config(&self) -> &PointConfiguration {
        &self.config
    }

    pub fn geometry(&self) -> &Geometry {
        &self.geom
    }

    fn check(&self, w: &WeightVector) -> Result<()> {
        w.check_len(self.ideal.nvars())
    }

    pub fn theta(&self, w: &WeightVector) -> Result<Subdivision> {
        self.check(w)?;
        Ok(regular_subdivision_with(&self.geom, w))
    }

    pub fn theta_star(&self, w: &WeightVector) -> Result<Subdivision> {
        self.check(w)?;
        Ok(regular_subdivision_with(&self.geom, &-w))
    }

    pub fn theta_signature(&self, w: &WeightVector) -> Result<Signature> {
        self.check(w)?;
        Ok(self.geom.maximal_cells(w))
    }

    pub fn theta_star_signature(&self, w: &WeightVector) -> Result<Signature> {
        self.check(w)?;
        Ok(self.geom.maximal_cells(&-w))
    }

    /// `I ∩ Q[c]`, memoized; cells contained in an already restricted cell
    /// are eliminated from that smaller ideal.
    pub fn restriction(&self, cell: &Cell) -> Arc<Ideal> {
        if let Some(r) = self.restrictions.lock().expect("poisoned").get(cell) {
            return r.clone();
        }
        let parent = {
            let map = self.restrictions.lock().expect("poisoned");
            map.iter()
                .filter(|(c, _)| cell.is_subset(c))
                .min_by_key(|(c, _)| c.len())
                .map(|(_, r)| r.clone())
        };
        let r = Arc::new(match parent {
            Some(p) => restrict_ideal(&p, cell),
            None => restrict_ideal(&self.ideal, cell),
        });
        self.restrictions
            .lock()
            .expect("poisoned")
            .entry(cell.clone())
            .or_insert(r)
            .clone()
    }

    pub fn lifted_restriction(&self, cell: &Cell) -> Ideal {
        lift(&self.restriction(cell), cell)
    }

    pub fn lower_from_cells(&self, maximal: &[Cell]) -> Ideal {
        sum_of_projections(&self.ideal, maximal)
    }

    pub fn upper_from_cells(&self, maximal: &[Cell]) -> Ideal {
        let lifted: Vec<Ideal> = maximal.iter().map(|c| self.lifted_restriction(c)).collect();
        intersect_all(&lifted).unwrap_or_else(|| Ideal::unit(self.ideal.ring().clone()))
    }

    /// `I_w`.
    pub fn lower_bound(&self, w: &WeightVector) -> Result<Ideal> {
        Ok(self.lower_from_cells(&self.theta_signature(w)?))
    }

    /// `I^w`.
    pub fn upper_bound(&self, w: &WeightVector) -> Result<Ideal> {
        Ok(self.upper_from_cells(&self.theta_star_signature(w)?))
    }

    pub fn initial(&self, w: &WeightVector) -> Result<Ideal> {
        self.ideal.initial_ideal(w)
    }

    pub fn sandwich(&self, w: &WeightVector) -> Result<SandwichReport> {
        let theta = self.theta(w)?;
        let theta_star = self.theta_star(w)?;
        let lower = self.lower_from_cells(&theta.signature());
        let upper = self.upper_from_cells(&theta_star.signature());
        let initial = self.initial(w)?;
        if !initial.contains_ideal(&lower) {
            return Err(Error::Invariant(format!("I_w is not contained in in_w I for w = {w}")));
        }
        if !upper.contains_ideal(&initial) {
            return Err(Error::Invariant(format!("in_w I is not contained in I^w for w = {w}")));
        }
        let lower_exact = lower.equals(&initial);
        let upper_exact = upper.equals(&initial);
        Ok(SandwichReport {
            w: w.clone(),
            lower,
            initial,
            upper,
            lower_exact,
            upper_exact,
            theta,
            theta_star,
        })
    }

    /// `I_w = in_w I`.
    pub fn omega_member(&self, w: &WeightVector) -> Result<bool> {
        let lower = self.lower_bound(w)?;
        let initial = self.initial(w)?;
        Ok(lower.equals(&initial))
    }

    /// `I^w = in_w I`.
    pub fn omega_star_member(&self, w: &WeightVector) -> Result<bool> {
        let upper = self.upper_bound(w)?;
        let initial = self.initial(w)?;
        Ok(upper.equals(&initial))
    }

    /// The bounds only depend on maximal cells and interior ridges:
    /// the sum of projections over all cells, over maximal cells and over
    /// the maximal cells plus interior ridges of `Θ` coincide, and the
    /// intersection of lifted restrictions over the maximal cells of `Θ*`
    /// is contained in the lifted restriction of every cell of `Θ*` (the
    /// reverse inclusion holds because the maximal cells are among them).
    pub fn kappa_reduction_check(&self, w: &WeightVector) -> Result<bool> {
        let theta = self.theta(w)?;
        let all = sum_of_projections(&self.ideal, theta.cells());
        let maximal = sum_of_projections(&self.ideal, theta.maximal_cells());
        let kappa = sum_of_projections(&self.ideal, &kappa_cells_with(&self.geom, &theta));
        if !(all.equals(&maximal) && maximal.equals(&kappa)) {
            return Ok(false);
        }
        let theta_star = self.theta_star(w)?;
        let upper = self.upper_from_cells(&theta_star.signature());
        let n = self.ideal.nvars();
        for cell in theta_star.cells() {
            let restricted = self.restriction(cell);
            let mask = cell.mask(n);
            // f ∈ I^c + <x_e : e ∉ c>  iff  ρ_c(f) ∈ I^c
            if !upper.generators().iter().all(|g| restricted.contains(&g.project(&mask))) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Projections of `I` to the maximal cells of `Θ` lie in `in_w I`, and
    /// `in_w I` lies in the lifted restriction to every maximal cell of `Θ*`.
    pub fn verify_initial_membership_props(&self, w: &WeightVector) -> Result<bool> {
        let initial = self.initial(w)?;
        for c in self.theta_signature(w)? {
            if !initial.contains_ideal(&project_ideal(&self.ideal, &c)) {
                return Ok(false);
            }
        }
        for c in self.theta_star_signature(w)? {
            if !self.lifted_restriction(&c).contains_ideal(&initial) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// For faces `Δ ⊂ Γ` of `Θ`: `ρ_Δ(I) = ρ_Γ(I) ∩ Q[Δ]`.
    pub fn projection_faces_compatible(&self, w: &WeightVector) -> Result<bool> {
        let theta = self.theta(w)?;
        for big in theta.cells() {
            let pg = project_ideal(&self.ideal, big);
            for small in theta.cells().iter().filter(|c| *c != big && c.is_subset(big)) {
                let drop: Vec<usize> = big.members().iter().copied().filter(|e| !small.contains(*e)).collect();
                if !project_ideal(&self.ideal, small).equals(&pg.eliminate(&drop)) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// For faces `Δ ⊂ Γ` of `Θ*`: `ρ_Δ(I ∩ Q[Γ]) = I ∩ Q[Δ]`.
    pub fn restriction_faces_compatible(&self, w: &WeightVector) -> Result<bool> {
        let theta_star = self.theta_star(w)?;
        for big in theta_star.cells() {
            let rg = restrict_ideal(&self.ideal, big);
            for small in theta_star.cells().iter().filter(|c| *c != big && c.is_subset(big)) {
                if !project_ideal(&rg, small).equals(&restrict_ideal(&self.ideal, small)) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Compares, in degree `d`, the space of tuples `(r_Δ)` with
    /// `r_Δ ∈ (Q[Δ]/I^Δ)_d` for the maximal cells of `Θ*`, agreeing under
    /// projection on every interior ridge, with `(S/I^w)_d`.
    pub fn verify_limit_decomposition(&self, w: &WeightVector, d: u32) -> Result<LimitCheck> {
        let n = self.ideal.nvars();
        let theta_star = self.theta_star(w)?;
        let graph = adjacency_graph_with(&self.geom, &theta_star);

        let bases: Vec<Vec<Monomial>> = graph
            .nodes
            .iter()
            .map(|c| standard_monomials(&self.restriction(c), c, d))
            .collect();
        let offsets: Vec<usize> = bases
            .iter()
            .scan(0, |acc, b| {
                let o = *acc;
                *acc += b.len();
                Some(o)
            })
            .collect();
        let total: usize = bases.iter().map(Vec::len).sum();

        let mut rows: Vec<Vector> = Vec::new();
        for (a, b, ridge) in &graph.edges {
            let target = self.restriction(ridge);
            let target_basis = standard_monomials(&target, ridge, d);
            let index: HashMap<&Monomial, usize> = target_basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
            let mask = ridge.mask(n);
            let gb = target.standard_basis();
            let mut block: Vec<Vector> = vec![vec![Rational::from_integer(0.into()); total]; target_basis.len()];
            for (node, sign) in [(*a, 1i64), (*b, -1i64)] {
                for (k, m) in bases[node].iter().enumerate() {
                    if !m.supported_on(&mask) {
                        continue;
                    }
                    let nf = gb.normal_form(&Polynomial::term(m.clone(), Rational::from_integer(1.into())));
                    for (t, c) in nf.terms() {
                        let row = index[t];
                        block[row][offsets[node] + k] += c * Rational::from_integer(sign.into());
                    }
                }
            }
            rows.extend(block);
        }
        let limit_dim = total - linalg::rank(&rows, total);

        let upper = self.upper_from_cells(&theta_star.signature());
        let in_ideal = upper.graded_dimension(d as usize)?.dims[d as usize] as usize;
        let quotient_dim = monomial_count(n, d) as usize - in_ideal;
        Ok(LimitCheck {
            degree: d,
            limit_dim,
            quotient_dim,
        })
    }
}

/// Degree-`d` monomials in the variables of `cell` that are standard for
/// the grevlex basis of `ideal`.
fn standard_monomials(ideal: &Ideal, cell: &Cell, d: u32) -> Vec<Monomial> {
    let n = ideal.nvars();
    let gb = ideal.standard_basis();
    let leads: Vec<Monomial> = gb.leading_monomials().cloned().collect();
    let vars = cell.members();
    let mut out = Vec::new();
    for_each_monomial(vars.len(), d, &mut |e| {
        let mut full = vec![0u32; n];
        for (k, &v) in vars.iter().enumerate() {
            full[v] = e[k];
        }
        let m = Monomial::new(full);
        if !leads.iter().any(|l| l.divides(&m)) {
            out.push(m);
        }
    });
    out
}

pub fn lower_bound_ideal(ideal: &Ideal, w: &WeightVector) -> Result<Ideal> {
    BoundsContext::new(ideal)?.lower_bound(w)
}

pub fn upper_bound_ideal(ideal: &Ideal, w: &WeightVector) -> Result<Ideal> {
    BoundsContext::new(ideal)?.upper_bound(w)
}

pub fn sandwich(ideal: &Ideal, w: &WeightVector) -> Result<SandwichReport> {
    BoundsContext::new(ideal)?.sandwich(w)
}

pub fn omega_member(ideal: &Ideal, w: &WeightVector) -> Result<bool> {
    BoundsContext::new(ideal)?.omega_member(w)
}

pub fn omega_star_member(ideal: &Ideal, w: &WeightVector) -> Result<bool> {
    BoundsContext::new(ideal)?.omega_star_member(w)
}

pub fn kappa_reduction_check(ideal: &Ideal, w: &WeightVector) -> Result<bool> {
    BoundsContext::new(ideal)?.kappa_reduction_check(w)
}

pub fn verify_limit_decomposition(ideal: &Ideal, w: &WeightVector, d: u32) -> Result<bool> {
    Ok(BoundsContext::new(ideal)?.verify_limit_decomposition(w, d)?.holds())
}

pub fn verify_initial_membership_props(ideal: &Ideal, w: &WeightVector) -> Result<bool> {
    BoundsContext::new(ideal)?.verify_initial_membership_props(w)
}
