//! The bounds I_w ⊆ in_w I ⊆ I^w on a few small ideals.
//!
//! cargo run --example sandwich

use subinit::bounds::BoundsContext;
use subinit::{Ideal, WeightVector};

fn report(ideal: &Ideal, w: &[i64]) -> subinit::Result<()> {
    let ctx = BoundsContext::new(ideal)?;
    let w = WeightVector::from_ints(w);
    let r = ctx.sandwich(&w)?;
    println!("I = {ideal}, w = {w}");
    println!("  I_w    = {}  (exact: {})", r.lower, r.lower_exact);
    println!("  in_w I = {}", r.initial);
    println!("  I^w    = {}  (exact: {})", r.upper, r.upper_exact);
    Ok(())
}

fn main() -> subinit::Result<()> {
    let square = Ideal::parse("x1*x2 - x3*x4")?;
    report(&square, &[0, 0, 1, 0])?;
    report(&square, &[1, 0, 0, 0])?;

    // two coincident points: the lower bound sees nothing
    report(&Ideal::parse("x1^2*x2 - x1*x2^2")?, &[0, 1])?;

    let twisted = Ideal::parse("x1*x3 - x2^2; x1*x4 - x2*x3; x2*x4 - x3^2")?;
    report(&twisted, &[0, 3, 1, 0])?;
    Ok(())
}
