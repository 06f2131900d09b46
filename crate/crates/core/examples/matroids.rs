//! Corank weights of matroids and the matroid subdivisions they induce on
//! the hypersimplex.
//!
//! cargo run --example matroids

use subinit::bounds::BoundsContext;
use subinit::fixtures::{corank_weight, hypersimplex_config, plucker_ideal, MatroidBases};
use subinit::subdivision::{adjacency_graph, regular_subdivision};

fn main() -> subinit::Result<()> {
    let cases = [
        (4, vec![vec![1, 2], vec![3], vec![4]]),
        (5, vec![vec![1, 2, 3], vec![4], vec![5]]),
        (5, vec![vec![1, 2], vec![3, 4], vec![5]]),
        (6, vec![vec![1, 2], vec![3, 4], vec![5, 6]]),
    ];
    for (n, classes) in cases {
        let m = MatroidBases::rank2_from_parallel_classes(n, &classes)?;
        let w = corank_weight(&m);
        let h = hypersimplex_config(2, n)?;
        let t = regular_subdivision(&h, &w)?;
        let g = adjacency_graph(&h, &t);
        let ctx = BoundsContext::new(&plucker_ideal(2, n)?)?;
        println!(
            "n = {n}, parallel classes {classes:?}: w = {w}, {} cells, star-shaped: {}, I_w = in_w I: {}",
            g.nodes.len(),
            g.is_star(),
            ctx.omega_member(&w)?
        );
    }
    Ok(())
}
