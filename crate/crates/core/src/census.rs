//! Weight-sampling census of the exactness loci `Ω(I)` and `Ω*(I)`.
//!
//! Integer weights are drawn from a seeded generator, grouped by the
//! maximal cells of `subd_w A(I)`, and each class representative is tested
//! for exactness of both bounds. Signatures are computed and classes
//! evaluated on a rayon pool whose size is capped by `SUBINIT_THREADS`.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::bounds::BoundsContext;
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::poly::{Rational, WeightVector};
use crate::subdivision::{signature_refines, Signature};

/// Number of extra sampled weights kept per class for consistency checks.
const WITNESSES: usize = 3;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusOptions {
    pub samples: usize,
    pub range: i64,
    pub seed: u64,
    /// Also sample `nongeneric_samples` weights from `[0, nongeneric_range]`.
    pub include_nongeneric: bool,
    pub nongeneric_samples: usize,
    pub nongeneric_range: i64,
}

impl CensusOptions {
    pub fn new(samples: usize, range: i64, seed: u64, include_nongeneric: bool) -> Self {
        CensusOptions {
            samples,
            range,
            seed,
            include_nongeneric,
            nongeneric_samples: samples,
            nongeneric_range: 2,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassInfo {
    pub representative: WeightVector,
    pub omega: bool,
    pub omega_star: bool,
    pub is_triangulation: bool,
    /// Maximal cells of `subd_{-w}` for the representative.
    pub theta_star: Signature,
    /// How many samples fell into the class.
    pub hits: usize,
    /// A few further samples of the class, for cone-constancy checks.
    pub witnesses: Vec<WeightVector>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusResult {
    pub classes: BTreeMap<Signature, ClassInfo>,
    pub samples_drawn: usize,
    pub seed: u64,
}

impl CensusResult {
    pub fn triangulation_classes(&self) -> usize {
        self.classes.values().filter(|c| c.is_triangulation).count()
    }

    pub fn omega_triangulations(&self) -> usize {
        self.classes.values().filter(|c| c.is_triangulation && c.omega).count()
    }
}

/// Worker count: `SUBINIT_THREADS` if set to a positive integer, otherwise
/// the available parallelism.
pub fn worker_count() -> usize {
    std::env::var("SUBINIT_THREADS")
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

/// Runs `f` on a pool of [`worker_count`] threads.
pub fn with_pool<T: Send>(f: impl FnOnce() -> T + Send) -> Result<T> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(worker_count())
        .build()
        .map_err(|e| Error::Invariant(format!("thread pool: {e}")))?;
    Ok(pool.install(f))
}

pub fn census(ideal: &Ideal, samples: usize, range: i64, seed: u64, include_nongeneric: bool) -> Result<CensusResult> {
    let ctx = BoundsContext::new(ideal)?;
    census_with(&ctx, &CensusOptions::new(samples, range, seed, include_nongeneric))
}

fn draw(n: usize, count: usize, range: i64, rng: &mut ChaCha8Rng) -> Vec<WeightVector> {
    (0..count)
        .map(|_| WeightVector::new((0..n).map(|_| Rational::from_integer(rng.gen_range(0..=range).into())).collect()))
        .collect()
}

/// (representative, hits, witnesses) as sample indices.
type Group = (usize, usize, Vec<usize>);

pub fn census_with(ctx: &BoundsContext, opts: &CensusOptions) -> Result<CensusResult> {
    if opts.range < 0 || opts.nongeneric_range < 0 {
        return Err(Error::Precondition("sampling range must be non-negative".into()));
    }
    let n = ctx.ideal().nvars();
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut weights = draw(n, opts.samples, opts.range, &mut rng);
    if opts.include_nongeneric {
        weights.extend(draw(n, opts.nongeneric_samples, opts.nongeneric_range, &mut rng));
    }
    let geom = ctx.geometry();

    with_pool(|| {
        let sigs: Vec<Signature> = weights.par_iter().map(|w| geom.maximal_cells(w)).collect();

        // first sample of each class is its representative
        let mut groups: BTreeMap<&Signature, Group> = BTreeMap::new();
        for (k, sig) in sigs.iter().enumerate() {
            let g = groups.entry(sig).or_insert((k, 0, Vec::new()));
            g.1 += 1;
            if g.0 != k && g.2.len() < WITNESSES {
                g.2.push(k);
            }
        }
        let work: Vec<(&Signature, Group)> = groups.into_iter().collect();
        let evaluated: Vec<Result<(Signature, ClassInfo)>> = work
            .into_par_iter()
            .map(|(sig, (rep, hits, wit))| {
                let w = &weights[rep];
                let (omega, omega_star) = exactness(ctx, w)?;
                let rank = geom.rank();
                Ok((
                    sig.clone(),
                    ClassInfo {
                        representative: w.clone(),
                        omega,
                        omega_star,
                        is_triangulation: sig.iter().all(|c| c.len() == rank && geom.rank_of(c.members()) == rank),
                        theta_star: geom.maximal_cells(&-w),
                        hits,
                        witnesses: wit.iter().map(|&k| weights[k].clone()).collect(),
                    },
                ))
            })
            .collect();
        let classes = evaluated.into_iter().collect::<Result<BTreeMap<_, _>>>()?;
        Ok(CensusResult {
            classes,
            samples_drawn: weights.len(),
            seed: opts.seed,
        })
    })?
}

/// `(w ∈ Ω, w ∈ Ω*)`. Graded dimensions up to the top generator degree
/// screen out inexact lower bounds before the basis comparison.
pub fn exactness(ctx: &BoundsContext, w: &WeightVector) -> Result<(bool, bool)> {
    let ideal = ctx.ideal();
    let initial = ctx.initial(w)?;
    let lower = ctx.lower_bound(w)?;
    let top = ideal.generators().iter().filter_map(|g| g.degree()).max().unwrap_or(0) as usize;
    let omega = lower.graded_dimension(top)? == ideal.graded_dimension(top)? && lower.equals(&initial);
    let omega_star = ctx.upper_bound(w)?.equals(&initial);
    Ok((omega, omega_star))
}

/// One evaluated weight.
#[derive(Clone, Debug)]
pub struct Evaluation {
    pub w: WeightVector,
    pub theta: Signature,
    pub theta_star: Signature,
    pub omega: bool,
    pub omega_star: bool,
}

/// Representatives together with freshly evaluated witnesses.
pub fn evaluations(ctx: &BoundsContext, result: &CensusResult) -> Result<Vec<Evaluation>> {
    let mut out: Vec<Evaluation> = result
        .classes
        .iter()
        .map(|(sig, c)| Evaluation {
            w: c.representative.clone(),
            theta: sig.clone(),
            theta_star: c.theta_star.clone(),
            omega: c.omega,
            omega_star: c.omega_star,
        })
        .collect();
    let witnesses: Vec<(Signature, WeightVector)> = result
        .classes
        .iter()
        .flat_map(|(sig, c)| c.witnesses.iter().map(move |w| (sig.clone(), w.clone())))
        .collect();
    let extra: Vec<Result<Evaluation>> = with_pool(|| {
        witnesses
            .into_par_iter()
            .map(|(theta, w)| {
                let (omega, omega_star) = exactness(ctx, &w)?;
                Ok(Evaluation {
                    theta_star: ctx.theta_star_signature(&w)?,
                    theta,
                    w,
                    omega,
                    omega_star,
                })
            })
            .collect()
    })?;
    for e in extra {
        out.push(e?);
    }
    Ok(out)
}

/// Pairs of weights with equal `Θ` (resp. `Θ*`) signature but different
/// `Ω` (resp. `Ω*`) verdicts.
pub fn cone_constancy_violations(evals: &[Evaluation]) -> Vec<String> {
    let mut out = Vec::new();
    let mut by_theta: BTreeMap<&Signature, &Evaluation> = BTreeMap::new();
    let mut by_star: BTreeMap<&Signature, &Evaluation> = BTreeMap::new();
    for e in evals {
        let first = by_theta.entry(&e.theta).or_insert(e);
        if first.omega != e.omega {
            out.push(format!("omega differs between {} and {}", first.w, e.w));
        }
        let first = by_star.entry(&e.theta_star).or_insert(e);
        if first.omega_star != e.omega_star {
            out.push(format!("omega_star differs between {} and {}", first.w, e.w));
        }
    }
    out
}

/// Pairs where `subd_w` refines `subd_w'`, `w ∈ Ω` and `w' ∉ Ω`; dually for
/// `subd_{-w}` and `Ω*`.
pub fn coarsening_violations(evals: &[Evaluation]) -> Vec<String> {
    let mut out = Vec::new();
    for fine in evals {
        for coarse in evals {
            if fine.omega && !coarse.omega && signature_refines(&fine.theta, &coarse.theta) {
                out.push(format!("w = {} in Omega but coarser w' = {} is not", fine.w, coarse.w));
            }
            if fine.omega_star && !coarse.omega_star && signature_refines(&fine.theta_star, &coarse.theta_star) {
                out.push(format!("w = {} in Omega* but coarser w' = {} is not", fine.w, coarse.w));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::plucker_ideal;
    use crate::poly::Ring;

    #[test]
    fn zero_weight_gives_trivial_class() {
        let i = Ideal::parse_in(Ring::numbered(4), &["x1*x2 - x3*x4"]).unwrap();
        let r = census(&i, 1, 0, 7, false).unwrap();
        assert_eq!(r.classes.len(), 1);
        let c = r.classes.values().next().unwrap();
        assert!(c.omega && c.omega_star && !c.is_triangulation);
        assert_eq!(r.samples_drawn, 1);
    }

    #[test]
    fn gr24_small_census() {
        let i = plucker_ideal(2, 4).unwrap();
        let r = census(&i, 60, 1000, 1, true).unwrap();
        assert!(r.classes.values().all(|c| c.omega));
        // the octahedron has three triangulations
        assert_eq!(r.triangulation_classes(), 3);
        let ctx = BoundsContext::new(&i).unwrap();
        let evals = evaluations(&ctx, &r).unwrap();
        assert!(cone_constancy_violations(&evals).is_empty());
        assert!(coarsening_violations(&evals).is_empty());
    }

    #[test]
    fn reproducible() {
        let i = Ideal::parse_in(Ring::numbered(4), &["x1*x2 - x3*x4"]).unwrap();
        let a = census(&i, 30, 50, 99, true).unwrap();
        let b = census(&i, 30, 50, 99, true).unwrap();
        assert_eq!(a, b);
        for (sig, c) in &a.classes {
            let ctx = BoundsContext::new(&i).unwrap();
            assert_eq!(&ctx.theta_signature(&c.representative).unwrap(), sig);
        }
    }

    #[test]
    fn negative_range_rejected() {
        let i = Ideal::parse_in(Ring::numbered(4), &["x1*x2 - x3*x4"]).unwrap();
        assert!(census(&i, 1, -1, 0, false).is_err());
    }
}
