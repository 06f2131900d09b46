//! Random phylogenetic trees give weights in the tropical Grassmannian
//! where the lower bound is exact, with one maximal cell per internal vertex.
//!
//! cargo run --example trees -- [n] [count] [seed]

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use subinit::bounds::BoundsContext;
use subinit::fixtures::{plucker_ideal, tree_weight, Tree};

fn main() -> subinit::Result<()> {
    let args: Vec<u64> = std::env::args().skip(1).map(|a| a.parse().expect("integer argument")).collect();
    let n = args.first().copied().unwrap_or(5) as usize;
    let count = args.get(1).copied().unwrap_or(5);
    let mut rng = ChaCha8Rng::seed_from_u64(args.get(2).copied().unwrap_or(1));

    let ideal = plucker_ideal(2, n)?;
    let ctx = BoundsContext::new(&ideal)?;
    for _ in 0..count {
        let tree = Tree::random(n, &mut rng);
        // initial forms take the lowest weight, so the tree point is -d
        let w = -&tree_weight(&tree, n)?;
        let cells = ctx.theta_signature(&w)?;
        println!(
            "w = {w}: {} internal vertices, {} maximal cells, I_w = in_w I: {}",
            tree.internal_vertices(),
            cells.len(),
            ctx.omega_member(&w)?
        );
    }
    Ok(())
}
