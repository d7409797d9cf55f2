//! A nonlinear syzygy of G \ S survives in G with whiskers at S.

use edgescm::decide::{koszul_lift_details, necessary_scm};
use edgescm::homology::FieldSpec;
use edgescm::{Graph, VarSet};

fn main() -> edgescm::Result<()> {
    // 6-cycle on 1..6 joined to vertices 7 and 8, whiskered at 7 and 8
    let mut g = Graph::cycle(6)?;
    g = Graph::from_edges(8, &g.edges().chain([(0, 6), (3, 6), (6, 7), (1, 7)]).collect::<Vec<_>>())?;
    let s: VarSet = [6, 7].into_iter().collect();

    let w = necessary_scm(&g, s, FieldSpec::GF2)?.expect("the 6-cycle is not SCM");
    println!(
        "G \\ S: beta_{},{} = {} at {} in degree {}",
        w.i,
        w.b.len(),
        w.rank,
        g.format_set(w.b),
        w.d
    );
    let (whiskered, _) = g.add_whiskers(s)?;
    println!("lifted multidegree {} in degree {}", whiskered.format_set(w.lifted_c), w.d + s.len());

    let check = koszul_lift_details(&g, s, &w)?;
    println!(
        "complexes equal: {}, {} faces, beta before {} after {}",
        check.complexes_equal, check.faces, check.beta_b, check.beta_c
    );
    Ok(())
}
