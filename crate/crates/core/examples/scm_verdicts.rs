//! Deciding sequential Cohen-Macaulayness and Cohen-Macaulayness.

use edgescm::decide::{is_cm, is_sequentially_cm, recheck_verdict};
use edgescm::homology::FieldSpec;
use edgescm::Graph;

fn main() -> edgescm::Result<()> {
    let graphs = [
        ("C5", Graph::cycle(5)?),
        ("C4", Graph::cycle(4)?),
        ("C6", Graph::cycle(6)?),
        ("P3", Graph::path(3)?),
        ("K4", Graph::complete(4)?),
        ("edgeless", Graph::new(3)?),
    ];
    for (name, g) in &graphs {
        let scm = is_sequentially_cm(g, FieldSpec::GF2);
        let cm = is_cm(g, FieldSpec::GF2);
        println!("{name:>8}  {}", scm.summary(g));
        println!("{:>8}  {}", "", cm.summary(g));
    }

    // verdicts carry enough evidence to be checked again from JSON
    let g = &graphs[1].1;
    let json = is_sequentially_cm(g, FieldSpec::Rationals).to_json(g);
    println!("{}", serde_json::to_string_pretty(&json)?);
    println!("recheck: {}", recheck_verdict(&json)?);
    Ok(())
}
