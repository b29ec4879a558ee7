//! Covering knots of alpha(p, q).

use knotcob::diagram::alpha_pq;
use knotcob::fatgraph::build_carter;
use knotcob::invariants::{halves, higher_invariants, DEFAULT_MAX_CROSSINGS};
use knotcob::Sign;

fn main() {
    for (p, q, m) in [(2, 2, 2), (2, 3, 2), (3, 3, 3), (2, 3, 3)] {
        let d = build_carter(&alpha_pq(p, q, &vec![Sign::Plus; p + q]).unwrap());
        let n: Vec<i64> = halves(&d).iter().map(|h| h.n).collect();
        let h = higher_invariants(&d, &[m], DEFAULT_MAX_CROSSINGS).unwrap();
        println!("alpha({p},{q}), m = {m}: n = {n:?}");
        println!("  cover {} with genus {}", h.diagram.gauss_code(), h.diagram.genus());
        println!("  u+ = {}, u- = {}, |T_bullet| = {}", h.u_plus, h.u_minus, h.primitive.size());
    }
}
