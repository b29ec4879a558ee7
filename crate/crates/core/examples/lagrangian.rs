//! The Lagrangian test over H_1(Sigma; Z/2).

use knotcob::diagram::{figure_eight, torus_two_crossing, trefoil};
use knotcob::fatgraph::build_carter;
use knotcob::slice::lagrangian_obstruction;

fn main() {
    for (name, code) in
        [("two-crossing", torus_two_crossing()), ("trefoil", trefoil()), ("figure eight", figure_eight())]
    {
        let v = lagrangian_obstruction(&build_carter(&code), 2).unwrap();
        println!("{name}: {}", serde_json::to_string(&v).unwrap());
    }
}
