//! Knot diagrams carried by a ribbon graph.

use crate::diagram::{Flag, GaussCode};
use crate::Sign;

use super::{DirEdge, EdgePath, Fatgraph, FatgraphError};

/// A crossing of an embedded diagram: a vertex the traversal visits twice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossingData {
    pub vertex: usize,
    pub label: String,
    /// Over/under flag of the first visit in traversal order.
    pub first_flag: Flag,
    pub writhe: Sign,
    /// Traversal indices of the edges leaving the crossing on the first and
    /// second visit.
    pub visits: (usize, usize),
}

impl CrossingData {
    /// Orientation of the frame (first pass, second pass).
    pub fn local_orientation(&self) -> Sign {
        match self.first_flag {
            Flag::Over => self.writhe,
            Flag::Under => -self.writhe,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddedDiagram {
    fatgraph: Fatgraph,
    traversal: EdgePath,
    crossings: Vec<CrossingData>,
}

impl EmbeddedDiagram {
    /// Assembles a diagram; crossings are the vertices visited twice by
    /// `traversal`, with data looked up by `crossing_info(vertex)`.
    pub(crate) fn assemble(
        fatgraph: Fatgraph,
        traversal: EdgePath,
        mut crossing_info: impl FnMut(usize) -> (String, Flag, Sign),
    ) -> Result<EmbeddedDiagram, FatgraphError> {
        if !fatgraph.is_closed_path(&traversal) {
            return Err(FatgraphError::PathNotOnGraph);
        }
        let mut visits: Vec<Vec<usize>> = vec![Vec::new(); fatgraph.vertex_count()];
        for (k, d) in traversal.edges().iter().enumerate() {
            visits[fatgraph.tail(*d)].push(k);
        }
        let mut crossings = Vec::new();
        for k in 0..traversal.len() {
            let v = fatgraph.tail(traversal.edges()[k]);
            match visits[v].as_slice() {
                [a, b] if *a == k => {
                    let (label, first_flag, writhe) = crossing_info(v);
                    crossings.push(CrossingData { vertex: v, label, first_flag, writhe, visits: (*a, *b) });
                }
                [_] | [_, _] => {}
                _ => return Err(FatgraphError::Malformed(format!("vertex {v} visited more than twice"))),
            }
        }
        Ok(EmbeddedDiagram { fatgraph, traversal, crossings })
    }

    pub fn fatgraph(&self) -> &Fatgraph {
        &self.fatgraph
    }

    pub fn traversal(&self) -> &EdgePath {
        &self.traversal
    }

    /// Crossings in order of first visit.
    pub fn crossings(&self) -> &[CrossingData] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn genus(&self) -> usize {
        self.fatgraph.genus().expect("ribbon graph of a diagram is orientable")
    }

    /// The Gauss code read off along the traversal. Since every invariant is
    /// computed inside a neighbourhood of the diagram, the Carter surface of
    /// this code carries the same invariants.
    pub fn gauss_code(&self) -> GaussCode {
        let mut at = vec![None; self.traversal.len()];
        for c in &self.crossings {
            at[c.visits.0] = Some((c, c.first_flag));
            at[c.visits.1] = Some((c, c.first_flag.toggled()));
        }
        let tokens: Vec<(String, Flag, Sign)> =
            at.into_iter().flatten().map(|(c, flag)| (c.label.clone(), flag, c.writhe)).collect();
        GaussCode::from_tokens(tokens).expect("diagram crossings form a valid code")
    }
}

/// The diagram on its Carter surface: one vertex per crossing, one edge per
/// arc between consecutive passages.
pub fn build_carter(code: &GaussCode) -> EmbeddedDiagram {
    if code.is_empty() {
        let fg = Fatgraph::new(vec![vec![0, 1]]).expect("circle");
        let traversal = EdgePath::new(vec![DirEdge::forward(0)]);
        return EmbeddedDiagram::assemble(fg, traversal, |_| unreachable!("no crossings")).expect("circle");
    }
    let len = code.len();
    let in_half = |p: usize| 2 * ((p + len - 1) % len) + 1;
    let out_half = |p: usize| 2 * p;
    let rotation: Vec<Vec<usize>> = (0..code.crossing_count())
        .map(|c| {
            let (p1, p2) = code.positions(c);
            match code.local_orientation(c) {
                Sign::Plus => vec![in_half(p1), in_half(p2), out_half(p1), out_half(p2)],
                Sign::Minus => vec![in_half(p1), out_half(p2), out_half(p1), in_half(p2)],
            }
        })
        .collect();
    let fg = Fatgraph::new(rotation).expect("well-formed rotation");
    let traversal = EdgePath::new((0..len).map(DirEdge::forward).collect());
    EmbeddedDiagram::assemble(fg, traversal, |v| (code.label(v).to_string(), code.first_flag(v), code.writhe(v)))
        .expect("traversal of a code is closed")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{figure_eight, torus_two_crossing, trefoil};

    #[test]
    fn carter_counts() {
        let d = build_carter(&torus_two_crossing());
        assert_eq!((d.fatgraph().vertex_count(), d.fatgraph().edge_count()), (2, 4));
        assert_eq!(d.genus(), 1);

        let d = build_carter(&trefoil());
        assert_eq!(d.fatgraph().vertex_count(), 3);
        assert_eq!(d.fatgraph().edge_count(), 6);
        assert_eq!(d.fatgraph().faces().len(), 5);
        assert_eq!(d.genus(), 0);

        assert_eq!(build_carter(&figure_eight()).genus(), 0);

        let d = build_carter(&GaussCode::parse("O1+ U1+").unwrap());
        assert_eq!(d.fatgraph().faces().len(), 3);
        assert_eq!(d.genus(), 0);
    }

    #[test]
    fn empty_code_is_a_circle_on_a_sphere() {
        let d = build_carter(&GaussCode::empty());
        assert_eq!(d.crossing_count(), 0);
        assert_eq!(d.genus(), 0);
        assert_eq!(d.fatgraph().faces().len(), 2);
        assert!(d.gauss_code().is_empty());
    }

    #[test]
    fn code_round_trips() {
        for code in [torus_two_crossing(), trefoil(), figure_eight()] {
            assert_eq!(build_carter(&code).gauss_code(), code);
        }
    }
}
