//! Reduced Gröbner bases, initial ideals, elimination and intersection.
//!
//! cargo run --example groebner

use subinit::groebner::{eliminate, intersect};
use subinit::{Ideal, MonomialOrder, WeightVector};

fn main() -> subinit::Result<()> {
    let twisted = Ideal::parse("x1*x3 - x2^2; x1*x4 - x2*x3; x2*x4 - x3^2")?;
    let ring = twisted.ring();

    for (name, order) in [("grevlex", MonomialOrder::grevlex()), ("lex", MonomialOrder::lex())] {
        let gb = twisted.groebner(&order);
        println!("{name} basis of the twisted cubic:");
        for g in gb.elements() {
            println!("  {}", g.to_string_in(ring));
        }
    }

    // lowest-weight terms: x4 is cheap, x1 expensive
    let w = WeightVector::from_ints(&[3, 2, 1, 0]);
    let init = twisted.initial_ideal(&w)?;
    println!("in_w I for w = {w}: {init}");
    println!("graded dims of I and in_w I agree: {:?}", twisted.graded_dimension(4)?.dims);

    let projected = eliminate(&twisted, &[1]);
    println!("I ∩ Q[x1, x3, x4] = {projected}");

    let a = Ideal::parse("x1*x2")?;
    let b = Ideal::parse_in(a.ring().clone(), &["x1 - x2"])?;
    println!("{a} ∩ {b} = {}", intersect(&a, &b));
    Ok(())
}
