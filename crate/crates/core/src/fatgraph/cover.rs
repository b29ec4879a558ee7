//! Cyclic coverings from voltage assignments.

use super::homology::SpanningTree;
use super::{intersect, DirEdge, EdgePath, EmbeddedDiagram, Fatgraph, FatgraphError};

/// A `Z/m`-valued voltage on the edges (stored for the forward direction).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Voltage {
    modulus: u32,
    values: Vec<u32>,
}

impl Voltage {
    pub fn zero(edge_count: usize, modulus: u32) -> Voltage {
        assert!(modulus >= 1, "modulus must be positive");
        Voltage { modulus, values: vec![0; edge_count] }
    }

    pub fn from_values(values: Vec<i64>, modulus: u32) -> Voltage {
        assert!(modulus >= 1, "modulus must be positive");
        let m = i64::from(modulus);
        Voltage { modulus, values: values.into_iter().map(|v| v.rem_euclid(m) as u32).collect() }
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn value(&self, d: DirEdge) -> u32 {
        let v = self.values[d.edge];
        if d.forward || v == 0 {
            v
        } else {
            self.modulus - v
        }
    }

    /// Total voltage along a path, in `0..m`.
    pub fn total(&self, path: &EdgePath) -> u32 {
        let m = u64::from(self.modulus);
        (path.edges().iter().map(|&d| u64::from(self.value(d))).sum::<u64>() % m) as u32
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }
}

/// The voltage dual to the class of `h` modulo `m`: zero on a spanning tree
/// and `z_e . h` on the other edges, so that every closed path `z` has total
/// voltage `z . h` mod `m`.
pub fn dual_voltage(fg: &Fatgraph, h: &EdgePath, m: u32) -> Result<Voltage, FatgraphError> {
    let tree = SpanningTree::new(fg)?;
    dual_voltage_with(fg, &tree, h, m)
}

/// [`dual_voltage`] against a precomputed spanning tree.
pub fn dual_voltage_with(fg: &Fatgraph, tree: &SpanningTree, h: &EdgePath, m: u32) -> Result<Voltage, FatgraphError> {
    let mut values = vec![0i64; fg.edge_count()];
    if m > 1 {
        for e in tree.cotree_edges() {
            values[e] = intersect(fg, &tree.fundamental_cycle(fg, e), h)?;
        }
    }
    Ok(Voltage::from_values(values, m))
}

/// The lift of `d` to the covering defined by `c`, starting on sheet 0.
pub fn voltage_cover(d: &EmbeddedDiagram, c: &Voltage) -> Result<EmbeddedDiagram, FatgraphError> {
    voltage_cover_from_sheet(d, c, 0)
}

/// The lift of `d` starting on `sheet`. The covering surface is the connected
/// component containing the lift; crossings are the lifted crossings the lift
/// passes twice, labelled `<label>s<sheet>`.
pub fn voltage_cover_from_sheet(
    d: &EmbeddedDiagram,
    c: &Voltage,
    sheet: u32,
) -> Result<EmbeddedDiagram, FatgraphError> {
    let fg = d.fatgraph();
    let m = c.modulus() as usize;
    let monodromy = c.total(d.traversal());
    if monodromy != 0 {
        return Err(FatgraphError::DoesNotLift(i64::from(monodromy)));
    }
    let sheet = sheet as usize % m;
    let shift = |i: usize, v: u32| (i + v as usize) % m;
    let unshift = |i: usize, v: u32| (i + m - v as usize) % m;

    // full cover: vertex (v, i) = v*m + i, edge (e, i) = e*m + i from sheet i to i + c(e)
    let rotation: Vec<Vec<usize>> = (0..fg.vertex_count() * m)
        .map(|vi| {
            let (v, i) = (vi / m, vi % m);
            fg.rotation(v)
                .iter()
                .map(|&h| {
                    let e = h / 2;
                    if h % 2 == 0 {
                        2 * (e * m + i)
                    } else {
                        2 * (e * m + unshift(i, c.value(DirEdge::forward(e)))) + 1
                    }
                })
                .collect()
        })
        .collect();
    let full = Fatgraph::new(rotation).expect("voltage cover is well formed");

    let mut lift = Vec::with_capacity(d.traversal().len());
    let mut i = sheet;
    for &step in d.traversal().edges() {
        let v = c.value(DirEdge::forward(step.edge));
        if step.forward {
            lift.push(DirEdge { edge: step.edge * m + i, forward: true });
            i = shift(i, v);
        } else {
            i = unshift(i, v);
            lift.push(DirEdge { edge: step.edge * m + i, forward: false });
        }
    }

    // restrict to the component containing the lift
    let start = full.tail(lift[0]);
    let component =
        full.components().into_iter().find(|comp| comp.binary_search(&start).is_ok()).expect("start vertex");
    let mut new_vertex = vec![usize::MAX; full.vertex_count()];
    for (k, &v) in component.iter().enumerate() {
        new_vertex[v] = k;
    }
    let mut new_edge = vec![usize::MAX; full.edge_count()];
    let mut next = 0;
    for e in 0..full.edge_count() {
        if new_vertex[full.vertex_of(2 * e)] != usize::MAX {
            new_edge[e] = next;
            next += 1;
        }
    }
    let rotation: Vec<Vec<usize>> =
        component.iter().map(|&v| full.rotation(v).iter().map(|&h| 2 * new_edge[h / 2] + h % 2).collect()).collect();
    let cover = Fatgraph::new(rotation).expect("component is well formed");
    let traversal =
        EdgePath::new(lift.iter().map(|d| DirEdge { edge: new_edge[d.edge], forward: d.forward }).collect());

    let base_crossing = |v: usize| d.crossings().iter().find(|x| x.vertex == v);
    EmbeddedDiagram::assemble(cover, traversal, |nv| {
        let v = component[nv];
        let x = base_crossing(v / m).expect("doubly visited lift vertex covers a crossing");
        (format!("{}s{}", x.label, v % m), x.first_flag, x.writhe)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{torus_two_crossing, trefoil};
    use crate::fatgraph::{build_carter, homology_basis};

    #[test]
    fn zero_voltage_reproduces_base() {
        for code in [trefoil(), torus_two_crossing()] {
            let d = build_carter(&code);
            for m in 1..4 {
                let c = Voltage::zero(d.fatgraph().edge_count(), m);
                let lift = voltage_cover(&d, &c).unwrap();
                assert_eq!(lift.crossing_count(), d.crossing_count());
                assert_eq!(lift.genus(), d.genus());
                assert_eq!(lift.fatgraph().vertex_count(), d.fatgraph().vertex_count());
            }
        }
    }

    #[test]
    fn face_voltage_is_zero() {
        let d = build_carter(&torus_two_crossing());
        let fg = d.fatgraph();
        for face in fg.faces() {
            assert!(dual_voltage(fg, &Fatgraph::face_path(&face), 5).unwrap().is_zero());
        }
        assert!(dual_voltage(fg, d.traversal(), 1).unwrap().is_zero());
    }

    #[test]
    fn voltage_totals_match_intersections() {
        let d = build_carter(&torus_two_crossing());
        let fg = d.fatgraph();
        for m in 2..6 {
            let c = dual_voltage(fg, d.traversal(), m).unwrap();
            for z in homology_basis(fg).unwrap() {
                let n = intersect(fg, &z, d.traversal()).unwrap();
                assert_eq!(i64::from(c.total(&z)), n.rem_euclid(i64::from(m)));
            }
        }
    }

    #[test]
    fn double_cover_of_two_crossing_knot() {
        let d = build_carter(&torus_two_crossing());
        let c = dual_voltage(d.fatgraph(), d.traversal(), 2).unwrap();
        let lift = voltage_cover(&d, &c).unwrap();
        assert_eq!(lift.crossing_count(), 0);
        // a connected double cover of the torus is a torus
        assert_eq!(lift.fatgraph().components().len(), 1);
        assert_eq!(lift.genus(), 1);
    }
}
