//! Samples weights for the Plücker ideal of Gr(2, n) and reports how many
//! secondary cones were found and on how many the bounds are exact.
//!
//! cargo run --example census -- [n] [samples] [range] [seed] [nongeneric: 0|1]

use std::time::Instant;

use subinit::census::{census_with, CensusOptions};
use subinit::bounds::BoundsContext;
use subinit::fixtures::plucker_ideal;

fn main() -> subinit::Result<()> {
    let args: Vec<u64> = std::env::args().skip(1).map(|a| a.parse().expect("integer argument")).collect();
    let n = args.first().copied().unwrap_or(5) as usize;
    let samples = args.get(1).copied().unwrap_or(2000) as usize;
    let range = args.get(2).copied().unwrap_or(10000) as i64;
    let seed = args.get(3).copied().unwrap_or(2024);
    let nongeneric = args.get(4).copied().unwrap_or(0) != 0;

    let start = Instant::now();
    let ideal = plucker_ideal(2, n)?;
    let ctx = BoundsContext::new(&ideal)?;
    let result = census_with(&ctx, &CensusOptions::new(samples, range, seed, nongeneric))?;

    println!("Gr(2,{n}): {} samples, {} classes", result.samples_drawn, result.classes.len());
    println!(
        "triangulations: {}, with exact lower bound: {}",
        result.triangulation_classes(),
        result.omega_triangulations()
    );
    let star = result.classes.values().filter(|c| c.omega_star).count();
    println!("classes with exact upper bound: {star}");
    println!("elapsed: {:.1?}", start.elapsed());
    Ok(())
}
