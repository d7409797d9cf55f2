//! Search, verify and serialize a linear-quotients order.

use edgescm::monomial::alexander_dual_of_edge_ideal;
use edgescm::quotients::{find_order, verify_order, QuotientOrder};
use edgescm::{Graph, VarSet};

fn main() -> edgescm::Result<()> {
    let c5 = Graph::cycle(5)?;
    let dual = alexander_dual_of_edge_ideal(&c5);

    let q = find_order(&dual).expect("the 5-cycle dual has linear quotients");
    for (m, colon) in q.ordered_generators().iter().zip(q.colon_vars()) {
        println!("{m:?} : {}", c5.format_set(*colon));
    }
    println!("verified: {}", verify_order(&q)?);
    println!("{}", serde_json::to_string_pretty(&q.to_json(c5.labels()))?);

    // an order given by hand; the colon sets are recomputed
    let listed: Vec<VarSet> = [[0, 1, 3], [0, 2, 3], [0, 2, 4], [1, 2, 4], [1, 3, 4]]
        .iter()
        .map(|vs| vs.iter().copied().collect())
        .collect();
    let by_hand = QuotientOrder::from_monomials(dual.clone(), &listed)?;
    println!("hand order colon sizes {:?}, valid {}", by_hand.colon_sizes(), verify_order(&by_hand)?);

    // the 4-cycle has no order in degree 2
    let c4 = Graph::cycle(4)?;
    println!("C4 degree 2 order: {:?}", find_order(&edgescm::monomial::dual_component(&c4, 2)).is_some());
    Ok(())
}
