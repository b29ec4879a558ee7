//! The Carter surface of a code: faces, genus and a symplectic basis with
//! its intersection form.

use knotcob::diagram::GaussCode;
use knotcob::fatgraph::{build_carter, faces_and_genus, intersect, surface_basis};

fn main() {
    let code: GaussCode = std::env::args().nth(1).as_deref().unwrap_or("O1+ O2+ U1+ U2+").parse().unwrap();
    let d = build_carter(&code);
    let fg = d.fatgraph();
    let (faces, g) = faces_and_genus(fg).unwrap();
    println!("V = {}, E = {}, F = {}, genus {g}", fg.vertex_count(), fg.edge_count(), faces.len());

    let basis = surface_basis(fg).unwrap();
    for a in &basis {
        let row: Vec<String> = basis.iter().map(|b| format!("{:>3}", intersect(fg, a, b).unwrap())).collect();
        println!("{}", row.join(""));
    }
    let k: Vec<i64> = basis.iter().map(|b| intersect(fg, d.traversal(), b).unwrap()).collect();
    println!("[K] . b_i = {k:?}");
}
