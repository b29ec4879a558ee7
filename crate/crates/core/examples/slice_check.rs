//! Full obstruction report for a code.

use knotcob::diagram::GaussCode;
use knotcob::fatgraph::build_carter;
use knotcob::slice::{obstruction_report, SliceConfig};

fn main() {
    let code: GaussCode = std::env::args().nth(1).as_deref().unwrap_or("O1+ O2+ U1+ U2+").parse().unwrap();
    let report = obstruction_report(&build_carter(&code), &SliceConfig::default());
    println!("{report}");
}
