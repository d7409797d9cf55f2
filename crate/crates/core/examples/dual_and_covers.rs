//! Minimal vertex covers and the Alexander dual of an edge ideal.

use edgescm::monomial::{alexander_dual_of_edge_ideal, dual_component, edge_ideal};
use edgescm::Graph;

fn main() -> edgescm::Result<()> {
    let g = Graph::parse("5 6\n1 2\n2 3\n3 4\n4 5\n5 1\n1 3\n")?;
    let names = g.labels();
    println!("I(G)   = {}", edge_ideal(&g).format(names));
    println!("I(G)^v = {}", alexander_dual_of_edge_ideal(&g).format(names));

    for cover in g.minimal_vertex_covers() {
        println!("minimal cover {}", g.format_set(cover));
    }
    println!("unmixed: {}", g.is_unmixed());

    // the degree-3 component also contains non-minimal covers
    let d3 = dual_component(&g, 3);
    println!("(I^v_[3]) has {} generators: {}", d3.len(), d3.format(names));
    Ok(())
}
