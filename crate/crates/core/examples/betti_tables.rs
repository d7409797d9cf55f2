//! Betti numbers from upper Koszul complexes, over several fields.

use edgescm::homology::{
    betti_from_quotient_order, betti_numbers, is_componentwise_linear, reduced_homology_ranks, upper_koszul_complex,
    FieldSpec,
};
use edgescm::monomial::{alexander_dual_of_edge_ideal, dual_component};
use edgescm::quotients::find_order;
use edgescm::Graph;

fn main() -> edgescm::Result<()> {
    // 4-cycle with a triangle hanging off one edge, plus a whisker
    let g = Graph::from_edges(7, &[(0, 1), (1, 2), (2, 3), (0, 3), (2, 4), (3, 4), (4, 5), (5, 6)])?;
    let dual = alexander_dual_of_edge_ideal(&g);
    println!("I^v = {}", dual.format(g.labels()));

    for field in [FieldSpec::GF2, FieldSpec::GF3, FieldSpec::Rationals] {
        let table = betti_numbers(&dual, field);
        println!("over {field}:\n{}", table.graded());
    }

    let report = is_componentwise_linear(&dual, FieldSpec::GF2);
    match report.first_failure() {
        Some((d, w)) => println!("degree {d} is not linear: beta_{} at {}", w.i, g.format_set(w.b)),
        None => println!("componentwise linear"),
    }

    // one multidegree by hand
    let c4 = Graph::cycle(4)?;
    let m = dual_component(&c4, 2);
    let k = upper_koszul_complex(&m, c4.vertices());
    println!("K^b for C4: facets {:?}, reduced homology {:?}", k.facets(), reduced_homology_ranks(&k, FieldSpec::GF2));

    // with an order the table follows from the colon sizes alone
    let c5 = dual_component(&Graph::cycle(5)?, 3);
    let q = find_order(&c5).expect("ordered");
    println!("C5 from the order:\n{}", betti_from_quotient_order(&q)?);
    Ok(())
}
