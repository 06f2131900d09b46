use super::*;
use crate::config::{lineality_of_config, PointConfiguration};
use crate::lp::convex_combination;
use crate::poly::{rat, Rational};
use proptest::prelude::*;

fn square() -> PointConfiguration {
    PointConfiguration::from_ints(&[&[0, 0], &[1, 1], &[1, 0], &[0, 1]])
}

fn cell(labels: &[usize]) -> Cell {
    Cell::new(labels.iter().map(|l| l - 1).collect())
}

fn w(v: &[i64]) -> WeightVector {
    WeightVector::from_ints(v)
}

fn theta1() -> Subdivision {
    regular_subdivision(&square(), &w(&[0, 0, 1, 0])).unwrap()
}

#[test]
fn square_subdivision() {
    let t = theta1();
    assert_eq!(t.signature(), vec![cell(&[1, 2, 3]), cell(&[1, 2, 4])]);
    assert!(t.cells().contains(&cell(&[1, 2])));
    assert!(t.cells().contains(&cell(&[3])));
    assert!(t.is_triangulation());
    assert!(t.uncovered().is_empty());
    // every non-maximal cell is a face of a maximal one
    for c in t.cells() {
        assert!(t.maximal_cells().any(|m| c.is_subset(m)));
    }
}

#[test]
fn zero_weight_gives_trivial_subdivision() {
    let t = regular_subdivision(&square(), &WeightVector::zeros(4)).unwrap();
    assert!(t.is_trivial());
    // faces of a square: itself, 4 edges, 4 vertices
    assert_eq!(t.cells().len(), 9);
}

#[test]
fn coincident_points() {
    let a = PointConfiguration::from_ints(&[&[1], &[1]]);
    let t = regular_subdivision(&a, &w(&[0, 1])).unwrap();
    assert_eq!(t.cells(), &[cell(&[1])]);
    assert_eq!(t.uncovered().get(&1), Some(&cell(&[1])));
    assert!(regular_subdivision(&a, &w(&[0, 1, 2])).is_err());
}

#[test]
fn faces_examples() {
    let tri = PointConfiguration::from_ints(&[&[0, 0], &[3, 0], &[0, 2]]);
    assert_eq!(faces_of_cell(&tri, &cell(&[1, 2, 3])).len(), 7);
    assert_eq!(faces_of_cell(&tri, &cell(&[2])), vec![cell(&[2])]);
    assert!(faces_of_cell(&square(), &cell(&[1, 2, 3])).contains(&cell(&[1, 2])));
}

#[test]
fn faces_with_collinear_points() {
    // 0,1,2 on a line: the segment has faces {1},{3} and itself; {2} is not a face
    let seg = PointConfiguration::from_ints(&[&[0], &[1], &[2]]);
    let f = faces_of_cell(&seg, &cell(&[1, 2, 3]));
    assert_eq!(f, vec![cell(&[1]), cell(&[1, 2, 3]), cell(&[3])]);
}

#[test]
fn refinement_examples() {
    let t = theta1();
    let trivial = regular_subdivision(&square(), &WeightVector::zeros(4)).unwrap();
    assert!(refines(&t, &t));
    assert!(refines(&t, &trivial));
    assert!(!refines(&trivial, &t));
}

#[test]
fn secondary_cone_examples() {
    let t = theta1();
    assert_eq!(in_secondary_cone(&square(), &t, &w(&[0, 0, 2, 0])).unwrap(), ConePosition::Interior);
    assert_eq!(in_secondary_cone(&square(), &t, &w(&[0, 0, 0, 0])).unwrap(), ConePosition::Boundary);
    assert_eq!(in_secondary_cone(&square(), &t, &w(&[1, 0, 0, 0])).unwrap(), ConePosition::Outside);
}

#[test]
fn adjacency_and_kappa() {
    let t = theta1();
    let g = adjacency_graph(&square(), &t);
    assert_eq!(g.nodes.len(), 2);
    assert_eq!(g.edges, vec![(0, 1, cell(&[1, 2]))]);
    assert_eq!(kappa_cells(&square(), &t), vec![cell(&[1, 2]), cell(&[1, 2, 3]), cell(&[1, 2, 4])]);

    let trivial = regular_subdivision(&square(), &WeightVector::zeros(4)).unwrap();
    let g0 = adjacency_graph(&square(), &trivial);
    assert_eq!(g0.nodes.len(), 1);
    assert!(g0.edges.is_empty());
    assert_eq!(kappa_cells(&square(), &trivial), vec![cell(&[1, 2, 3, 4])]);

    let two = PointConfiguration::from_ints(&[&[1], &[1]]);
    let t2 = regular_subdivision(&two, &w(&[0, 1])).unwrap();
    assert_eq!(kappa_cells(&two, &t2), vec![cell(&[1])]);
}

#[test]
fn rational_and_large_weights_agree_with_small_path() {
    let g = Geometry::new(&square());
    let small = g.maximal_cells(&w(&[0, 0, 1, 0]));
    let half = WeightVector::new(vec![rat(0), rat(0), crate::poly::rat_frac(1, 3), rat(0)]);
    assert_eq!(g.maximal_cells(&half), small);
    let big = WeightVector::new(vec![
        rat(0),
        rat(0),
        Rational::from_integer(num_bigint::BigInt::from(10).pow(30)),
        rat(0),
    ]);
    assert_eq!(g.maximal_cells(&big), small);
}

fn random_config() -> impl Strategy<Value = PointConfiguration> {
    (2usize..4).prop_flat_map(|d| {
        prop::collection::vec(prop::collection::vec(-2i64..3, d), d + 1..d + 4).prop_map(|pts| {
            let refs: Vec<&[i64]> = pts.iter().map(Vec::as_slice).collect();
            PointConfiguration::from_ints(&refs)
        })
    })
}

fn config_and_weight() -> impl Strategy<Value = (PointConfiguration, Vec<i64>)> {
    random_config().prop_flat_map(|a| {
        let n = a.len();
        (Just(a), prop::collection::vec(-3i64..4, n))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cells_closed_under_intersection((a, wv) in config_and_weight()) {
        let t = regular_subdivision(&a, &w(&wv)).unwrap();
        for c in t.cells() {
            for d in t.cells() {
                let i = c.intersection(d);
                if !i.is_empty() {
                    prop_assert!(t.cells().contains(&i), "{c} ∩ {d} = {i} is not a cell");
                }
            }
        }
    }

    #[test]
    fn lineality_gives_trivial((a, wv) in config_and_weight(), coeffs in prop::collection::vec(-3i64..4, 4)) {
        let l = lineality_of_config(&a);
        let n = a.len();
        let mut ell = vec![Rational::from_integer(0.into()); n];
        for (v, c) in l.vectors().iter().zip(&coeffs) {
            for e in 0..n {
                ell[e] += &v[e] * rat(*c);
            }
        }
        let ell = WeightVector::new(ell);
        prop_assert!(regular_subdivision(&a, &ell).unwrap().is_trivial());
        let wv = w(&wv);
        let t = regular_subdivision(&a, &wv).unwrap();
        prop_assert_eq!(t.is_trivial(), l.contains(wv.entries()));
        let shifted = &wv + &ell;
        prop_assert_eq!(regular_subdivision(&a, &shifted).unwrap().signature(), t.signature());
        let by_ones = &wv + &WeightVector::ones(n).scaled(&rat(5));
        prop_assert_eq!(regular_subdivision(&a, &by_ones).unwrap().signature(), t.signature());
    }

    #[test]
    fn maximal_cells_cover_hull((a, wv) in config_and_weight(), mix in prop::collection::vec(0i64..5, 7)) {
        let t = regular_subdivision(&a, &w(&wv)).unwrap();
        let total: i64 = mix.iter().take(a.len()).sum::<i64>().max(1);
        let d = a.ambient_dim();
        let mut x = vec![Rational::from_integer(0.into()); d];
        for (e, m) in mix.iter().take(a.len()).enumerate() {
            for (xk, pk) in x.iter_mut().zip(a.point(e)) {
                *xk += pk * crate::poly::rat_frac(*m, total);
            }
        }
        if mix.iter().take(a.len()).all(|m| *m == 0) {
            x = a.point(0).clone();
        }
        let covered = t.maximal_cells().any(|c| {
            let pts: Vec<Vec<Rational>> = c.members().iter().map(|&e| a.point(e).clone()).collect();
            convex_combination(&pts, &x).is_some()
        });
        prop_assert!(covered);
    }

    #[test]
    fn ridges_in_two_maximal_cells((a, wv) in config_and_weight()) {
        let geom = Geometry::new(&a);
        let t = regular_subdivision_with(&geom, &w(&wv));
        let g = adjacency_graph_with(&geom, &t);
        for (_, _, ridge) in &g.edges {
            prop_assert_eq!(t.maximal_cells().filter(|m| ridge.is_subset(m)).count(), 2);
        }
        // the adjacency graph of a subdivision is connected
        let mut seen = vec![false; g.nodes.len()];
        let mut stack = vec![0usize];
        while let Some(v) = stack.pop() {
            if std::mem::replace(&mut seen[v], true) { continue; }
            for (x, y, _) in &g.edges {
                if *x == v { stack.push(*y); }
                if *y == v { stack.push(*x); }
            }
        }
        prop_assert!(seen.iter().all(|s| *s));
    }
}
