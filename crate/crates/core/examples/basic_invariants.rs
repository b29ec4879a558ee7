//! u+-, the graded matrix and its primitive reduction for a few knots.
//!
//! ```text
//! cargo run --example basic_invariants -- "O1+ O2+ U1+ U2+"
//! ```

use knotcob::diagram::{figure_eight, torus_two_crossing, trefoil, GaussCode};
use knotcob::fatgraph::build_carter;
use knotcob::graded::reduce_primitive;
use knotcob::invariants::{graded_matrix_of, u_polynomials};

fn main() {
    let codes: Vec<GaussCode> = match std::env::args().nth(1) {
        Some(s) => vec![s.parse().expect("a signed Gauss code")],
        None => vec![torus_two_crossing(), trefoil(), figure_eight()],
    };
    for code in codes {
        let d = build_carter(&code);
        let (up, um) = u_polynomials(&d);
        let (prim, _) = reduce_primitive(&graded_matrix_of(&d)).unwrap();
        println!("{code}");
        println!("  genus {}, u+ = {up}, u- = {um}", d.genus());
        println!("{prim}");
    }
}
