//! Generators for the standard example families: toric ideals, Plücker
//! ideals of `Gr(2, n)`, hypersimplices, phylogenetic tree weights and
//! matroid corank weights.

use std::collections::BTreeSet;

use num_traits::{One, Signed, Zero};
use rand::Rng;

use crate::config::PointConfiguration;
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::poly::{Monomial, MonomialOrder, Polynomial, Rational, Ring, WeightVector};
use crate::subdivision::k_subsets as combinations;

/// The toric ideal of an integer configuration: the kernel of
/// `x_e ↦ t z^{a_e}`, computed by elimination.
pub fn toric_ideal(config: &PointConfiguration) -> Result<Ideal> {
    let m = config.len();
    let d = config.ambient_dim();
    let mut shift = vec![Rational::zero(); d];
    for p in config.points() {
        for (k, x) in p.iter().enumerate() {
            if !x.is_integer() {
                return Err(Error::Precondition(format!("non-integer coordinate {x}")));
            }
            if *x < shift[k] {
                shift[k] = x.clone();
            }
        }
    }
    let total = m + 1 + d;
    let mut gens = Vec::with_capacity(m);
    for (e, p) in config.points().iter().enumerate() {
        let mut exps = vec![0u32; total];
        exps[m] = 1;
        for k in 0..d {
            let v = (&p[k] - &shift[k]).to_integer();
            exps[m + 1 + k] = u32::try_from(v)
                .map_err(|_| Error::Unsupported("coordinate range too large".into()))?;
        }
        let image = Polynomial::term(Monomial::new(exps), Rational::one());
        gens.push(&Polynomial::var(total, e) - &image);
    }
    let drop: Vec<usize> = (m..total).collect();
    let order = MonomialOrder::elimination(total, &drop);
    let ring = Ring::new(config.labels().iter().cloned());
    let mut extra = Vec::with_capacity(d + 1);
    extra.push(ring.fresh_label("t"));
    for k in 0..d {
        extra.push(ring.fresh_label(&format!("z{}", k + 1)));
    }
    let big = Ideal::new(ring.extended(extra), gens);
    let kept = big
        .groebner(&order)
        .elements()
        .iter()
        .filter_map(|g| g.truncated(m))
        .collect();
    Ok(Ideal::new(ring, kept))
}

fn subset_label(s: &[usize]) -> String {
    s.iter().map(|i| (i + 1).to_string()).collect::<Vec<_>>().join(",")
}

/// Labels `"i,j"` of the 2-subsets of `[n]` in lexicographic order.
pub fn pair_labels(n: usize) -> Vec<String> {
    combinations(n, 2).iter().map(|s| subset_label(s)).collect()
}

/// Index of the pair `{i, j}` (0-based, `i < j`) in lexicographic order.
pub fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

/// The Plücker ideal `I_{k,n}`; only `k = 2` is supported.
pub fn plucker_ideal(k: usize, n: usize) -> Result<Ideal> {
    if k != 2 {
        return Err(Error::Unsupported(format!("Plücker ideals only for k = 2, got k = {k}")));
    }
    if n < 4 {
        return Err(Error::Precondition(format!("need n >= 4, got {n}")));
    }
    let m = n * (n - 1) / 2;
    let ring = Ring::new(pair_labels(n));
    let prod = |a: (usize, usize), b: (usize, usize)| {
        let mut e = vec![0u32; m];
        e[pair_index(n, a.0, a.1)] += 1;
        e[pair_index(n, b.0, b.1)] += 1;
        Monomial::new(e)
    };
    let gens = combinations(n, 4)
        .into_iter()
        .map(|q| {
            let (i, j, k, l) = (q[0], q[1], q[2], q[3]);
            Polynomial::from_terms(
                m,
                [
                    (prod((i, j), (k, l)), Rational::one()),
                    (prod((i, k), (j, l)), -Rational::one()),
                    (prod((i, l), (j, k)), Rational::one()),
                ],
            )
        })
        .collect();
    Ok(Ideal::new(ring, gens))
}

/// Vertices of the hypersimplex `Δ(k, n)`, labeled by their subsets.
pub fn hypersimplex_config(k: usize, n: usize) -> Result<PointConfiguration> {
    if k == 0 || k >= n {
        return Err(Error::Precondition(format!("need 1 <= k < n, got k = {k}, n = {n}")));
    }
    let subsets = combinations(n, k);
    let labels = subsets.iter().map(|s| subset_label(s)).collect();
    let points = subsets
        .iter()
        .map(|s| {
            let mut v = vec![Rational::zero(); n];
            for &i in s {
                v[i] = Rational::one();
            }
            v
        })
        .collect();
    PointConfiguration::new(labels, points)
}

/// A tree with leaves `0..n` (leaf `i` carries label `i + 1`) and internal
/// vertices `n..`.
#[derive(Clone, Debug)]
pub struct Tree {
    leaves: usize,
    vertices: usize,
    edges: Vec<(usize, usize, Rational)>,
}

impl Tree {
    pub fn new(leaves: usize, vertices: usize, edges: Vec<(usize, usize, Rational)>) -> Result<Self> {
        let bad = |m: String| Err(Error::Precondition(m));
        if leaves < 2 || vertices < leaves {
            return bad(format!("{vertices} vertices with {leaves} leaves"));
        }
        if edges.len() + 1 != vertices {
            return bad("a tree on v vertices has v - 1 edges".into());
        }
        let mut degree = vec![0usize; vertices];
        let mut parent: Vec<usize> = (0..vertices).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for (a, b, _) in &edges {
            if *a >= vertices || *b >= vertices || a == b {
                return bad(format!("bad edge ({a}, {b})"));
            }
            degree[*a] += 1;
            degree[*b] += 1;
            let (ra, rb) = (find(&mut parent, *a), find(&mut parent, *b));
            if ra == rb {
                return bad("edges contain a cycle".into());
            }
            parent[ra] = rb;
        }
        for (v, &d) in degree.iter().enumerate() {
            if v < leaves && d != 1 {
                return bad(format!("leaf {} has degree {d}", v + 1));
            }
            if v >= leaves && d < 3 {
                return bad(format!("internal vertex {v} has degree {d}"));
            }
        }
        for (a, b, wt) in &edges {
            if *a >= leaves && *b >= leaves && !wt.is_positive() {
                return bad(format!("internal edge ({a}, {b}) has non-positive weight"));
            }
        }
        Ok(Tree { leaves, vertices, edges })
    }

    /// The star tree with the given leaf-edge weights.
    pub fn star(leaf_weights: &[Rational]) -> Result<Self> {
        let n = leaf_weights.len();
        let edges = leaf_weights.iter().enumerate().map(|(i, w)| (i, n, w.clone())).collect();
        Tree::new(n, n + 1, edges)
    }

    /// A random tree: a random binary tree by leaf insertion, with some
    /// internal edges contracted, internal weights in `1..=10` and leaf
    /// weights in `-5..=5`.
    pub fn random(n: usize, rng: &mut impl Rng) -> Self {
        assert!(n >= 3, "random trees need at least 3 leaves");
        // edges as (a, b); internal vertex ids start at n
        let mut edges: Vec<(usize, usize)> = vec![(0, n), (1, n), (2, n)];
        for (x, leaf) in (n + 1..).zip(3..n) {
            let k = rng.gen_range(0..edges.len());
            let (a, b) = edges[k];
            edges[k] = (a, x);
            edges.push((x, b));
            edges.push((leaf, x));
        }
        // contract internal edges
        loop {
            let internal: Vec<usize> = (0..edges.len()).filter(|&k| edges[k].0 >= n && edges[k].1 >= n).collect();
            if internal.is_empty() || !rng.gen_bool(0.3) {
                break;
            }
            let k = internal[rng.gen_range(0..internal.len())];
            let (keep, gone) = edges.remove(k);
            for e in &mut edges {
                if e.0 == gone {
                    e.0 = keep;
                }
                if e.1 == gone {
                    e.1 = keep;
                }
            }
        }
        // renumber internal vertices densely
        let mut ids: Vec<usize> = edges.iter().flat_map(|e| [e.0, e.1]).filter(|&v| v >= n).collect();
        ids.sort_unstable();
        ids.dedup();
        let renum = |v: usize| if v < n { v } else { n + ids.binary_search(&v).expect("known vertex") };
        let weighted = edges
            .iter()
            .map(|&(a, b)| {
                let (a, b) = (renum(a), renum(b));
                let w = if a >= n && b >= n { rng.gen_range(1..=10) } else { rng.gen_range(-5..=5) };
                (a, b, Rational::from_integer(w.into()))
            })
            .collect();
        Tree::new(n, n + ids.len(), weighted).expect("generated tree is valid")
    }

    pub fn leaves(&self) -> usize {
        self.leaves
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn internal_vertices(&self) -> usize {
        self.vertices - self.leaves
    }

    pub fn edges(&self) -> &[(usize, usize, Rational)] {
        &self.edges
    }

    /// Sums of edge weights along the path from `from` to every vertex.
    fn distances(&self, from: usize) -> Vec<Rational> {
        let mut adj: Vec<Vec<(usize, &Rational)>> = vec![Vec::new(); self.vertices];
        for (a, b, w) in &self.edges {
            adj[*a].push((*b, w));
            adj[*b].push((*a, w));
        }
        let mut dist: Vec<Option<Rational>> = vec![None; self.vertices];
        dist[from] = Some(Rational::zero());
        let mut stack = vec![from];
        while let Some(v) = stack.pop() {
            let dv = dist[v].clone().expect("visited");
            for &(u, w) in &adj[v] {
                if dist[u].is_none() {
                    dist[u] = Some(&dv + w);
                    stack.push(u);
                }
            }
        }
        dist.into_iter().map(|d| d.expect("connected")).collect()
    }
}

/// `w_{ij}` = sum of edge weights on the path between leaves `i` and `j`,
/// indexed like [`pair_labels`].
pub fn tree_weight(tree: &Tree, n: usize) -> Result<WeightVector> {
    if tree.leaves != n {
        return Err(Error::Precondition(format!("tree has {} leaves, expected {n}", tree.leaves)));
    }
    let mut w = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        let d = tree.distances(i);
        w.extend(d[i + 1..n].iter().cloned());
    }
    Ok(WeightVector::new(w))
}

/// A matroid given by its bases, as sorted 0-based subsets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatroidBases {
    n: usize,
    k: usize,
    bases: BTreeSet<Vec<usize>>,
}

impl MatroidBases {
    /// Bases are 1-based subsets of `[n]`; basis exchange is checked.
    pub fn new(n: usize, k: usize, bases: &[Vec<usize>]) -> Result<Self> {
        let bad = |m: String| Err(Error::Precondition(m));
        let mut set = BTreeSet::new();
        for b in bases {
            let mut s: Vec<usize> = b.iter().map(|i| i.wrapping_sub(1)).collect();
            s.sort_unstable();
            s.dedup();
            if s.len() != k || s.iter().any(|&i| i >= n) {
                return bad(format!("{b:?} is not a {k}-subset of [1,{n}]"));
            }
            set.insert(s);
        }
        if set.is_empty() {
            return bad("a matroid has at least one basis".into());
        }
        for a in &set {
            for b in &set {
                for x in a.iter().filter(|x| !b.contains(x)) {
                    let ok = b.iter().filter(|y| !a.contains(y)).any(|y| {
                        let mut c: Vec<usize> = a.iter().copied().filter(|z| z != x).collect();
                        c.push(*y);
                        c.sort_unstable();
                        set.contains(&c)
                    });
                    if !ok {
                        return bad(format!("basis exchange fails for {a:?}, {b:?}"));
                    }
                }
            }
        }
        Ok(MatroidBases { n, k, bases: set })
    }

    pub fn uniform(k: usize, n: usize) -> Result<Self> {
        let all: Vec<Vec<usize>> = combinations(n, k)
            .into_iter()
            .map(|s| s.into_iter().map(|i| i + 1).collect())
            .collect();
        MatroidBases::new(n, k, &all)
    }

    /// The rank-2 matroid whose rank-one flats are the given parallel
    /// classes (1-based); elements in no class are loops.
    pub fn rank2_from_parallel_classes(n: usize, classes: &[Vec<usize>]) -> Result<Self> {
        let mut bases = Vec::new();
        for (a, ca) in classes.iter().enumerate() {
            for cb in &classes[a + 1..] {
                for &x in ca {
                    for &y in cb {
                        bases.push(vec![x.min(y), x.max(y)]);
                    }
                }
            }
        }
        MatroidBases::new(n, 2, &bases)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.k
    }

    pub fn bases(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.bases.iter()
    }

    /// `rk(S)` for a 0-based subset.
    pub fn rank_of(&self, s: &[usize]) -> usize {
        self.bases
            .iter()
            .map(|b| b.iter().filter(|x| s.contains(x)).count())
            .max()
            .unwrap_or(0)
    }

    pub fn is_basis(&self, s: &[usize]) -> bool {
        self.bases.contains(s)
    }
}

/// `w(M)_B = n - rk_M(B)` over all `k`-subsets in lexicographic order.
pub fn corank_weight(m: &MatroidBases) -> WeightVector {
    let w = combinations(m.n, m.k)
        .iter()
        .map(|b| Rational::from_integer(((m.n - m.rank_of(b)) as i64).into()))
        .collect();
    WeightVector::new(w)
}
