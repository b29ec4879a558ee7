//! The knots alpha(p, q): graded matrix, genus and u+- for small p, q.

use knotcob::diagram::alpha_pq;
use knotcob::fatgraph::build_carter;
use knotcob::graded::{genus, is_primitive};
use knotcob::invariants::{graded_matrix_of, u_polynomials};
use knotcob::Sign;

fn main() {
    for p in 1..=3 {
        for q in 1..=3 {
            let d = build_carter(&alpha_pq(p, q, &vec![Sign::Plus; p + q]).unwrap());
            let t = graded_matrix_of(&d);
            let (up, um) = u_polynomials(&d);
            println!(
                "alpha({p},{q}): surface genus {}, primitive {}, sigma {}, u+ = {up}, u- = {um}",
                d.genus(),
                is_primitive(&t),
                genus(&t).unwrap()
            );
        }
    }
    let d = build_carter(&alpha_pq(2, 3, &[Sign::Plus, Sign::Minus, Sign::Plus, Sign::Plus, Sign::Minus]).unwrap());
    println!("{}", graded_matrix_of(&d));
}
