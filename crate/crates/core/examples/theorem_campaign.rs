//! Randomized checks of the whisker theorems.

use edgescm::harness::{exhaustive_t37, run_campaign, Campaign, TheoremId};
use edgescm::homology::FieldSpec;

fn main() -> edgescm::Result<()> {
    for theorem in TheoremId::ALL {
        let c = Campaign::new(theorem, 25, 6, 7).with_fields(vec![FieldSpec::GF2, FieldSpec::Rationals]);
        let report = run_campaign(&c)?;
        print!("{report}");
    }
    let r = exhaustive_t37(4);
    println!(
        "every graph on at most 4 vertices: {} pairs, {} disagreements",
        r.pairs,
        r.disagreements.len()
    );
    Ok(())
}
