//! Regular subdivisions, their faces, secondary cones and adjacency graphs.
//!
//! cargo run --example subdivision

use subinit::config::PointConfiguration;
use subinit::fixtures::hypersimplex_config;
use subinit::subdivision::{adjacency_graph, in_secondary_cone, regular_subdivision};
use subinit::WeightVector;

fn main() -> subinit::Result<()> {
    let square = PointConfiguration::from_ints(&[&[0, 0], &[1, 1], &[1, 0], &[0, 1]]);
    for w in [[0, 0, 1, 0], [1, 0, 0, 0], [1, 1, 1, 1]] {
        let w = WeightVector::from_ints(&w);
        let t = regular_subdivision(&square, &w)?;
        let cells: Vec<String> = t.maximal_cells().map(|c| c.to_string()).collect();
        println!("square, w = {w}: maximal cells {}", cells.join(" "));
    }

    let cells = regular_subdivision(&square, &WeightVector::from_ints(&[0, 0, 1, 0]))?;
    println!("all cells of the first subdivision:");
    for c in cells.cells() {
        println!("  {c}");
    }
    for w in [[0, 0, 5, 1], [1, 1, 1, 1], [1, 0, 0, 0]] {
        let w = WeightVector::from_ints(&w);
        println!("  w = {w} lies {:?} its secondary cone", in_secondary_cone(&square, &cells, &w)?);
    }

    let octahedron = hypersimplex_config(2, 4)?;
    let split = regular_subdivision(&octahedron, &WeightVector::from_ints(&[1, 0, 0, 0, 0, 1]))?;
    let graph = adjacency_graph(&octahedron, &split);
    println!(
        "octahedron split by a square: {} maximal cells, {} interior walls, triangulation: {}",
        graph.nodes.len(),
        graph.edges.len(),
        split.is_triangulation()
    );
    let generic = regular_subdivision(&octahedron, &WeightVector::from_ints(&[5, 0, 3, 1, 0, 0]))?;
    println!("a generic weight gives a triangulation: {}", generic.is_triangulation());
    Ok(())
}
