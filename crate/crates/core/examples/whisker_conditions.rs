//! Which whisker sets make a graph sequentially Cohen-Macaulay.

use edgescm::decide::{sufficient_scm, whiskered_scm};
use edgescm::homology::FieldSpec;
use edgescm::{Graph, VarSet};

fn main() -> edgescm::Result<()> {
    let c6 = Graph::cycle(6)?;
    for s in [VarSet::EMPTY, VarSet::singleton(0), [0, 3].into_iter().collect(), [0, 2, 4].into_iter().collect()] {
        let hit = sufficient_scm(&c6, s)?;
        let (w, v) = whiskered_scm(&c6, s, FieldSpec::GF2)?;
        let why = hit.map(|h| format!("{:?}", h.all)).unwrap_or_else(|| "no sufficient condition".into());
        println!("S = {:<8} {why:<40} {}", c6.format_set(s), v.summary(&w));
    }

    // whiskering every vertex gives a Cohen-Macaulay graph
    let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)])?;
    let (w, _) = g.add_whiskers(g.vertices())?;
    println!("G with all whiskers: {}", edgescm::decide::is_cm(&w, FieldSpec::GF2).summary(&w));
    Ok(())
}
