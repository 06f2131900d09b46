//! Degree-by-degree comparison of S/I^w with the compatible tuples over the
//! maximal cells and interior walls of subd_{-w}.
//!
//! cargo run --example limit

use subinit::bounds::BoundsContext;
use subinit::fixtures::plucker_ideal;
use subinit::{Ideal, WeightVector};

fn main() -> subinit::Result<()> {
    let cases = [
        (Ideal::parse("x1*x2 - x3*x4")?, WeightVector::from_ints(&[1, 0, 0, 0])),
        (Ideal::parse("x1^2*x2 - x1*x2^2")?, WeightVector::from_ints(&[0, 1])),
        (plucker_ideal(2, 4)?, WeightVector::from_ints(&[3, 0, 1, 4, 2, 0])),
    ];
    for (ideal, w) in cases {
        let ctx = BoundsContext::new(&ideal)?;
        println!("I = {ideal}, w = {w}");
        for d in 0..=4 {
            let c = ctx.verify_limit_decomposition(&w, d)?;
            println!("  d = {d}: tuples {:>3}, dim (S/I^w)_d {:>3}", c.limit_dim, c.quotient_dim);
        }
    }
    Ok(())
}
