//! The point configuration A(I) of a homogeneous ideal, read off the
//! lineality space of its Gröbner fan.
//!
//! cargo run --example point_configuration

use subinit::config::{affine_equivalent, lineality_space, point_configuration_of_ideal};
use subinit::fixtures::{hypersimplex_config, plucker_ideal, toric_ideal};
use subinit::config::PointConfiguration;
use subinit::poly::format_rational;

fn show(name: &str, c: &PointConfiguration) {
    println!("{name}: {} points, affine dimension {}", c.len(), c.affine_dim());
    for (label, p) in c.labels().iter().zip(c.points()) {
        let coords: Vec<String> = p.iter().map(format_rational).collect();
        println!("  {label:>5}: ({})", coords.join(", "));
    }
}

fn main() -> subinit::Result<()> {
    let g24 = plucker_ideal(2, 4)?;
    let a = point_configuration_of_ideal(&g24)?;
    show("A(I_2,4)", &a);
    let octahedron = hypersimplex_config(2, 4)?;
    println!("affinely equivalent to Δ(2,4): {}", affine_equivalent(&a, &octahedron)?);

    let square = PointConfiguration::from_ints(&[&[0, 0], &[1, 1], &[1, 0], &[0, 1]]);
    let toric = toric_ideal(&square)?;
    println!("toric ideal of the unit square: {toric}");
    let back = point_configuration_of_ideal(&toric)?;
    show("A(toric ideal)", &back);
    println!("recovers the square: {}", affine_equivalent(&back, &square)?);

    let cubic = subinit::Ideal::parse("x1^2*x2 - x1*x2^2")?;
    let l = lineality_space(&cubic)?;
    println!("L(<x1^2 x2 - x1 x2^2>) has dimension {}, so both points coincide", l.dim());
    Ok(())
}
