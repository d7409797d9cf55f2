//! Worked examples with known dual generators, Betti tables and orders.

use edgescm::harness::run_all_fixtures;
use edgescm::homology::FieldSpec;

fn main() -> edgescm::Result<()> {
    let mut ok = true;
    for r in run_all_fixtures(FieldSpec::Rationals)? {
        print!("{r}");
        ok &= r.ok();
    }
    std::process::exit(if ok { 0 } else { 1 })
}
