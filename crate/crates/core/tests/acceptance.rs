//! Acceptance suite: one pass/fail line per criterion.
//!
//! Runs without the libtest harness so the summary lines are always shown.

use std::collections::{BTreeSet, HashMap};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::{Arc, Mutex, OnceLock};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use subinit::bounds::BoundsContext;
use subinit::census::{
    census_with, coarsening_violations, cone_constancy_violations, evaluations, with_pool, CensusOptions,
    CensusResult,
};
use subinit::config::{
    affine_equivalent, lineality_matrix, lineality_space, point_configuration_of_ideal, PointConfiguration,
};
use subinit::fixtures::{hypersimplex_config, pair_index, plucker_ideal, toric_ideal, tree_weight, Tree};
use subinit::groebner::graded::monomials_of_degree;
use subinit::linalg::{self, Vector};
use subinit::poly::rat;
use subinit::subdivision::{adjacency_graph_with, Cell};
use subinit::{Ideal, Monomial, Polynomial, Rational, Ring, WeightVector};

type Check = std::result::Result<String, String>;
type Criterion<'a> = (u32, &'a str, Box<dyn Fn(&Instances) -> Check>);

fn ensure(cond: bool, msg: impl Into<String>) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn ideal(n: usize, gens: &[&str]) -> Ideal {
    Ideal::parse_in(Ring::numbered(n), gens).expect("valid ideal")
}

fn square_ideal() -> Ideal {
    ideal(4, &["x1*x2 - x3*x4"])
}

fn cubic_ideal() -> Ideal {
    ideal(2, &["x1^2*x2 - x1*x2^2"])
}

fn square_config() -> PointConfiguration {
    PointConfiguration::from_ints(&[&[0, 0], &[1, 1], &[1, 0], &[0, 1]])
}

fn w(v: &[i64]) -> WeightVector {
    WeightVector::from_ints(v)
}

fn random_weight(n: usize, lo: i64, hi: i64, rng: &mut ChaCha8Rng) -> WeightVector {
    WeightVector::new((0..n).map(|_| rat(rng.gen_range(lo..=hi))).collect())
}

/// `(ideal, weight)` pairs gathered by criteria 1-7 for the reduction check.
struct Instances {
    items: Mutex<Vec<(Arc<BoundsContext>, WeightVector)>>,
}

impl Instances {
    fn push(&self, ctx: &Arc<BoundsContext>, w: &WeightVector) {
        self.items.lock().unwrap().push((ctx.clone(), w.clone()));
    }
}

fn gr25_census() -> &'static (Arc<BoundsContext>, CensusResult, Duration) {
    static CENSUS: OnceLock<(Arc<BoundsContext>, CensusResult, Duration)> = OnceLock::new();
    CENSUS.get_or_init(|| {
        let start = Instant::now();
        let ctx = Arc::new(BoundsContext::new(&plucker_ideal(2, 5).unwrap()).unwrap());
        let result = census_with(&ctx, &CensusOptions::new(20000, 10000, 2024, true)).unwrap();
        (ctx, result, start.elapsed())
    })
}

fn criterion_1(inst: &Instances) -> Check {
    let ctx = Arc::new(BoundsContext::new(&square_ideal()).unwrap());
    for (wv, expected) in [([0, 0, 1, 0], "x1*x2"), ([1, 0, 0, 0], "x3*x4")] {
        let start = Instant::now();
        let wt = w(&wv);
        let target = ideal(4, &[expected]);
        let r = ctx.sandwich(&wt).map_err(|e| e.to_string())?;
        ensure(r.lower.equals(&target), format!("I_w wrong for {wt}"))?;
        ensure(r.initial.equals(&target), format!("in_w I wrong for {wt}"))?;
        ensure(r.upper.equals(&target), format!("I^w wrong for {wt}"))?;
        ensure(start.elapsed() < Duration::from_secs(1), format!("{wt} took {:?}", start.elapsed()))?;
        inst.push(&ctx, &wt);
    }
    Ok("I_w = in_w I = I^w on both nontrivial cones".into())
}

fn criterion_2(inst: &Instances) -> Check {
    let i = cubic_ideal();
    let ctx = Arc::new(BoundsContext::new(&i).unwrap());
    let a = ctx.config();
    ensure(a.len() == 2 && a.point(0) == a.point(1), "A(I) is not two coincident points")?;
    let wt = w(&[0, 1]);
    let r = ctx.sandwich(&wt).map_err(|e| e.to_string())?;
    ensure(r.theta.cells() == [Cell::new(vec![0])], format!("cells {:?}", r.theta.cells()))?;
    ensure(r.lower.is_zero(), "I_w is not zero")?;
    ensure(!r.lower_exact, "lower bound reported exact")?;
    inst.push(&ctx, &wt);
    Ok("two coincident points, single cell {1}, I_w = 0, not exact".into())
}

fn criterion_3(inst: &Instances) -> Check {
    let g24 = plucker_ideal(2, 4).unwrap();
    let a24 = point_configuration_of_ideal(&g24).unwrap();
    ensure(affine_equivalent(&a24, &hypersimplex_config(2, 4).unwrap()).unwrap(), "A(I_2,4) vs Δ(2,4)")?;
    let sq = toric_ideal(&square_config()).unwrap();
    ensure(affine_equivalent(&point_configuration_of_ideal(&sq).unwrap(), &square_config()).unwrap(), "square")?;

    let fixtures: Vec<(&str, Ideal)> = vec![
        ("square toric", sq),
        ("segment toric", toric_ideal(&PointConfiguration::from_ints(&[&[0], &[1], &[2]])).unwrap()),
        ("doubled point toric", toric_ideal(&PointConfiguration::from_ints(&[&[1], &[1]])).unwrap()),
        ("octahedron toric", toric_ideal(&hypersimplex_config(2, 4).unwrap()).unwrap()),
        ("I_2,4", g24),
        ("I_2,5", plucker_ideal(2, 5).unwrap()),
        ("I_2,6", plucker_ideal(2, 6).unwrap()),
        ("coincident cubic", cubic_ideal()),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for (name, i) in &fixtures {
        let n = lineality_matrix(i);
        let a = point_configuration_of_ideal(i).unwrap();
        let r = a.ambient_dim();
        let nm = linalg::mat_mul(&n, a.points(), r);
        ensure(nm.iter().all(|row| linalg::is_zero_vector(row)), format!("N·M != 0 for {name}"))?;
        ensure(lineality_space(i).unwrap().contains_ones(), format!("1 not in L for {name}"))?;
        let ctx = Arc::new(BoundsContext::new(i).unwrap());
        inst.push(&ctx, &WeightVector::zeros(i.nvars()));
        inst.push(&ctx, &random_weight(i.nvars(), 0, 9, &mut rng));
    }
    Ok(format!("A(I) matches on both examples; N·M = 0 and 1 ∈ L for {} fixture ideals", fixtures.len()))
}

fn criterion_4(inst: &Instances) -> Check {
    let start = Instant::now();
    let ctx = Arc::new(BoundsContext::new(&plucker_ideal(2, 4).unwrap()).unwrap());
    let r = census_with(&ctx, &CensusOptions::new(200, 1000, 4, true)).map_err(|e| e.to_string())?;
    let bad = r.classes.values().filter(|c| !c.omega).count();
    ensure(bad == 0, format!("{bad} classes outside Omega"))?;
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(30), format!("took {elapsed:?}"))?;
    for c in r.classes.values() {
        inst.push(&ctx, &c.representative);
    }
    Ok(format!("{} classes, all with I_w = in_w I, {elapsed:.1?}", r.classes.len()))
}

fn criterion_5(inst: &Instances) -> Check {
    let (ctx, r, elapsed) = gr25_census();
    let tri = r.triangulation_classes();
    ensure(tri >= 102, format!("only {tri} triangulation classes found"))?;
    ensure(tri == 102, format!("{tri} triangulation classes"))?;
    let omega = r.omega_triangulations();
    ensure(omega == 72, format!("{omega} of 102 triangulations in Omega"))?;
    ensure(*elapsed < Duration::from_secs(900), format!("took {elapsed:?}"))?;
    for c in r.classes.values() {
        inst.push(ctx, &c.representative);
    }
    Ok(format!(
        "{tri} triangulations, {omega} in Omega ({} classes, {} samples, {elapsed:.1?})",
        r.classes.len(),
        r.samples_drawn
    ))
}

/// Maximal cells predicted by the tree: for each internal vertex, the pairs
/// whose leaf path passes through it.
fn tree_cells(t: &Tree) -> BTreeSet<Cell> {
    let n = t.leaves();
    let mut adj = vec![Vec::new(); t.vertices()];
    for (a, b, _) in t.edges() {
        adj[*a].push(*b);
        adj[*b].push(*a);
    }
    let path = |s: usize, e: usize| -> Vec<usize> {
        let mut prev = vec![usize::MAX; t.vertices()];
        prev[s] = s;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &u in &adj[v] {
                if prev[u] == usize::MAX {
                    prev[u] = v;
                    stack.push(u);
                }
            }
        }
        let mut out = vec![e];
        let mut v = e;
        while v != s {
            v = prev[v];
            out.push(v);
        }
        out
    };
    let mut by_vertex: HashMap<usize, Vec<usize>> = HashMap::new();
    for i in 0..n {
        for j in i + 1..n {
            for v in path(i, j) {
                if v >= n {
                    by_vertex.entry(v).or_default().push(pair_index(n, i, j));
                }
            }
        }
    }
    by_vertex.into_values().map(Cell::new).collect()
}

fn criterion_6(inst: &Instances) -> Check {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut checked = 0;
    for n in [4, 5, 6] {
        let ctx = Arc::new(BoundsContext::new(&plucker_ideal(2, n).unwrap()).unwrap());
        let trees: Vec<Tree> = (0..25).map(|_| Tree::random(n, &mut rng)).collect();
        let results: Vec<std::result::Result<(), String>> = with_pool(|| {
            trees
                .par_iter()
                .map(|t| {
                    // the tropical point of the tree under the min convention
                    let wt = -&tree_weight(t, n).unwrap();
                    let cells: BTreeSet<Cell> = ctx.theta_signature(&wt).unwrap().into_iter().collect();
                    ensure(
                        cells.len() == t.internal_vertices(),
                        format!("n={n}: {} cells for {} internal vertices", cells.len(), t.internal_vertices()),
                    )?;
                    ensure(cells == tree_cells(t), format!("n={n}: cells differ from the tree's vertex cells"))?;
                    ensure(ctx.omega_member(&wt).unwrap(), format!("n={n}: w = {wt} not in Omega"))
                })
                .collect()
        })
        .unwrap();
        for (t, r) in trees.iter().zip(results) {
            r?;
            inst.push(&ctx, &-&tree_weight(t, n).unwrap());
            checked += 1;
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(300), format!("took {elapsed:?}"))?;
    Ok(format!("{checked} trees: cells = internal vertices, I_w = in_w I ({elapsed:.1?})"))
}

fn random_ideal(rng: &mut ChaCha8Rng) -> Ideal {
    let n = rng.gen_range(2..=5);
    let ngens = rng.gen_range(1..=3);
    let gens = (0..ngens)
        .map(|_| {
            let deg = rng.gen_range(1..=3);
            // mostly binomials, which give nontrivial configurations
            let nterms = [1, 2, 2, 2, 3][rng.gen_range(0..5)];
            let all = monomials_of_degree(n, deg);
            let terms: Vec<(Monomial, Rational)> = (0..nterms)
                .map(|_| {
                    let m = all[rng.gen_range(0..all.len())].clone();
                    let c = [-3, -2, -1, 1, 2, 3][rng.gen_range(0..6)];
                    (m, rat(c))
                })
                .collect();
            let p = Polynomial::from_terms(n, terms);
            if p.is_zero() {
                Polynomial::term(all[0].clone(), rat(1))
            } else {
                p
            }
        })
        .collect();
    Ideal::new(Ring::numbered(n), gens)
}

fn criterion_7(inst: &Instances) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let cases: Vec<(Ideal, Vec<WeightVector>)> = (0..200)
        .map(|_| {
            let i = random_ideal(&mut rng);
            let ws = (0..5).map(|_| random_weight(i.nvars(), -4, 4, &mut rng)).collect();
            (i, ws)
        })
        .collect();
    let results: Vec<std::result::Result<(Arc<BoundsContext>, usize), String>> = with_pool(|| {
        cases
            .par_iter()
            .map(|(i, ws)| {
                let ctx = Arc::new(BoundsContext::new(i).map_err(|e| e.to_string())?);
                let mut nontrivial = 0;
                for wt in ws {
                    let r = ctx.sandwich(wt).map_err(|e| format!("{i} at {wt}: {e}"))?;
                    if r.theta.maximal_indices().len() > 1 {
                        nontrivial += 1;
                    }
                    ensure(ctx.projection_faces_compatible(wt).unwrap(), format!("projection faces: {i} at {wt}"))?;
                    ensure(ctx.restriction_faces_compatible(wt).unwrap(), format!("restriction faces: {i} at {wt}"))?;
                }
                Ok((ctx, nontrivial))
            })
            .collect()
    })
    .unwrap();
    let mut nontrivial = 0;
    for ((_, ws), r) in cases.iter().zip(results) {
        let (ctx, k) = r?;
        nontrivial += k;
        for wt in ws {
            inst.push(&ctx, wt);
        }
    }
    Ok(format!("1000 sandwiches on 200 ideals hold, face checks pass ({nontrivial} with several maximal cells)"))
}

fn criterion_8() -> Check {
    let (ctx, r, _) = gr25_census();
    let evals = evaluations(ctx, r).map_err(|e| e.to_string())?;
    let constancy = cone_constancy_violations(&evals);
    ensure(constancy.is_empty(), constancy.first().cloned().unwrap_or_default())?;
    let closure = coarsening_violations(&evals);
    ensure(closure.is_empty(), closure.first().cloned().unwrap_or_default())?;
    let pairs = evals
        .iter()
        .flat_map(|a| evals.iter().map(move |b| (a, b)))
        .filter(|(a, b)| a.theta != b.theta && subinit::subdivision::signature_refines(&a.theta, &b.theta))
        .count();
    Ok(format!("{} weights, {pairs} strict refinement pairs, no violations", evals.len()))
}

/// Brute-force degree-`d` linear algebra, independent of Gröbner bases.
struct Oracle {
    n: usize,
    d: u32,
    mons: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl Oracle {
    fn new(n: usize, d: u32) -> Self {
        let mons = monomials_of_degree(n, d);
        let index = mons.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        Oracle { n, d, mons, index }
    }

    fn dim(&self) -> usize {
        self.mons.len()
    }

    /// Basis of `J_d` from products of generators with monomials.
    fn degree_part(&self, gens: &[Polynomial]) -> Vec<Vector> {
        let mut rows = Vec::new();
        for g in gens {
            let Some(dg) = g.degree() else { continue };
            if dg > self.d {
                continue;
            }
            for m in monomials_of_degree(self.n, self.d - dg) {
                let mut v = vec![rat(0); self.dim()];
                for (t, c) in g.mul_monomial(&m).terms() {
                    v[self.index[t]] += c;
                }
                rows.push(v);
            }
        }
        linalg::span_basis(&rows, self.dim())
    }

    fn in_cell(&self, m: &Monomial, cell: &Cell) -> bool {
        m.support().all(|e| cell.contains(e))
    }

    /// `U ∩ V` for subspaces given by spanning rows.
    fn intersect(&self, u: &[Vector], v: &[Vector]) -> Vec<Vector> {
        let mut stacked = u.to_vec();
        stacked.extend(v.iter().cloned());
        let k = stacked.len();
        let coeffs = linalg::kernel(&linalg::transpose(&stacked, self.dim()), k);
        let rows: Vec<Vector> = coeffs
            .iter()
            .map(|x| {
                let mut out = vec![rat(0); self.dim()];
                for (xi, row) in x[..u.len()].iter().zip(u) {
                    for (o, r) in out.iter_mut().zip(row) {
                        *o += xi * r;
                    }
                }
                out
            })
            .collect();
        linalg::span_basis(&rows, self.dim())
    }

    fn coordinate_subspace(&self, pred: impl Fn(&Monomial) -> bool) -> Vec<Vector> {
        self.mons
            .iter()
            .enumerate()
            .filter(|(_, m)| pred(m))
            .map(|(i, _)| {
                let mut v = vec![rat(0); self.dim()];
                v[i] = rat(1);
                v
            })
            .collect()
    }

    /// `(I ∩ Q[cell])_d`.
    fn restricted(&self, id: &[Vector], cell: &Cell) -> Vec<Vector> {
        self.intersect(id, &self.coordinate_subspace(|m| self.in_cell(m, cell)))
    }
}

/// `(limit_dim, quotient_dim)` by brute force.
fn limit_oracle(ctx: &BoundsContext, wt: &WeightVector, d: u32) -> (usize, usize) {
    let n = ctx.ideal().nvars();
    let o = Oracle::new(n, d);
    let id = o.degree_part(ctx.ideal().generators());
    let theta_star = ctx.theta_star(wt).unwrap();
    let graph = adjacency_graph_with(ctx.geometry(), &theta_star);

    // quotient side: intersection of the lifted restrictions
    let mut upper: Option<Vec<Vector>> = None;
    for c in &graph.nodes {
        let mut lifted = o.restricted(&id, c);
        lifted.extend(o.coordinate_subspace(|m| !o.in_cell(m, c)));
        let lifted = linalg::span_basis(&lifted, o.dim());
        upper = Some(match upper {
            None => lifted,
            Some(u) => o.intersect(&u, &lifted),
        });
    }
    let quotient_dim = o.dim() - upper.map_or(0, |u| u.len());

    // limit side: unknowns are v_Δ ∈ Q[Δ]_d and coefficients in W_Γ
    let cell_mons: Vec<Vec<usize>> = graph
        .nodes
        .iter()
        .map(|c| (0..o.dim()).filter(|&i| o.in_cell(&o.mons[i], c)).collect())
        .collect();
    let mut offsets = Vec::new();
    let mut total = 0;
    for cm in &cell_mons {
        offsets.push(total);
        total += cm.len();
    }
    let ridge_spaces: Vec<Vec<Vector>> = graph.edges.iter().map(|(_, _, g)| o.restricted(&id, g)).collect();
    let extra: usize = ridge_spaces.iter().map(Vec::len).sum();
    let unknowns = total + extra;
    let mut rows: Vec<Vector> = Vec::new();
    let mut coeff_offset = total;
    for ((a, b, ridge), space) in graph.edges.iter().zip(&ridge_spaces) {
        for (mi, m) in o.mons.iter().enumerate() {
            if !o.in_cell(m, ridge) {
                continue;
            }
            let mut row = vec![rat(0); unknowns];
            for (node, sign) in [(*a, 1), (*b, -1)] {
                if let Some(k) = cell_mons[node].iter().position(|&x| x == mi) {
                    row[offsets[node] + k] = rat(sign);
                }
            }
            for (k, wv) in space.iter().enumerate() {
                row[coeff_offset + k] = -wv[mi].clone();
            }
            rows.push(row);
        }
        coeff_offset += space.len();
    }
    let tuples = unknowns - linalg::rank(&rows, unknowns);
    let cell_ideals: usize = graph.nodes.iter().map(|c| o.restricted(&id, c).len()).sum();
    (tuples - cell_ideals, quotient_dim)
}

fn criterion_9() -> Check {
    let mut cases: Vec<(Ideal, WeightVector, u32)> = Vec::new();
    for d in 0..=4 {
        cases.push((toric_ideal(&square_config()).unwrap(), w(&[1, 0, 0, 0]), d));
    }
    for d in 0..=4 {
        cases.push((cubic_ideal(), w(&[0, 1]), d));
        cases.push((cubic_ideal(), w(&[1, 0]), d));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let g24 = plucker_ideal(2, 4).unwrap();
    for _ in 0..5 {
        let wt = random_weight(6, 0, 20, &mut rng);
        for d in 0..=3 {
            cases.push((g24.clone(), wt.clone(), d));
        }
    }
    for (i, wt, d) in &cases {
        let ctx = BoundsContext::new(i).unwrap();
        let lib = ctx.verify_limit_decomposition(wt, *d).map_err(|e| e.to_string())?;
        let (limit, quotient) = limit_oracle(&ctx, wt, *d);
        ensure(
            (lib.limit_dim, lib.quotient_dim) == (limit, quotient),
            format!("{i} at {wt}, d={d}: library {lib:?}, oracle ({limit}, {quotient})"),
        )?;
        ensure(lib.holds(), format!("{i} at {wt}, d={d}: {lib:?}"))?;
    }
    Ok(format!("{} (ideal, w, d) cases agree with the brute-force oracle", cases.len()))
}

fn criterion_10(inst: &Instances) -> Check {
    let items = std::mem::take(&mut *inst.items.lock().unwrap());
    let failures: Vec<String> = with_pool(|| {
        items
            .par_iter()
            .filter_map(|(ctx, wt)| match ctx.kappa_reduction_check(wt) {
                Ok(true) => None,
                Ok(false) => Some(format!("{} at {wt}", ctx.ideal())),
                Err(e) => Some(e.to_string()),
            })
            .collect()
    })
    .unwrap();
    ensure(failures.is_empty(), format!("{} failures, first: {}", failures.len(), failures.first().cloned().unwrap_or_default()))?;
    Ok(format!("{} instances from criteria 1-7", items.len()))
}

fn criterion_11() -> Check {
    let ctx = BoundsContext::new(&toric_ideal(&square_config()).unwrap()).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..50 {
        let wt = random_weight(4, -10, 10, &mut rng);
        ensure(ctx.omega_star_member(&wt).unwrap(), format!("w = {wt} not in Omega*"))?;
    }
    Ok("50 random weights, I^w = in_w I".into())
}

fn main() {
    let inst = Instances { items: Mutex::new(Vec::new()) };
    let criteria: Vec<Criterion> = vec![
        (1, "worked examples: square", Box::new(criterion_1)),
        (2, "coincident points example", Box::new(criterion_2)),
        (3, "point configuration pipeline", Box::new(criterion_3)),
        (4, "Gr(2,4) exactness census", Box::new(criterion_4)),
        (5, "Gr(2,5) census 102/72", Box::new(criterion_5)),
        (6, "tree weights on Gr(2,n)", Box::new(criterion_6)),
        (7, "sandwich fuzzing", Box::new(criterion_7)),
        (8, "cone constancy and coarsening closure", Box::new(|_: &Instances| criterion_8())),
        (9, "limit verification", Box::new(|_: &Instances| criterion_9())),
        (10, "K(Θ) reduction", Box::new(criterion_10)),
        (11, "toric unimodular Omega*", Box::new(|_: &Instances| criterion_11())),
    ];
    let mut failed = 0;
    for (id, name, f) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(|| f(&inst)))
            .unwrap_or_else(|p| Err(p.downcast_ref::<String>().cloned().unwrap_or_else(|| "panicked".into())));
        let elapsed = start.elapsed();
        match outcome {
            Ok(detail) => println!("criterion {id:>2} PASS  {name}: {detail} [{elapsed:.1?}]"),
            Err(detail) => {
                failed += 1;
                println!("criterion {id:>2} FAIL  {name}: {detail} [{elapsed:.1?}]");
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
    println!("all criteria passed");
}
