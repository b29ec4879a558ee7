//! Ribbon graphs, the closed surfaces they present, and homological
//! intersection numbers of closed edge paths on them.
//!
//! Half-edge `2e` is the tail end of edge `e`, half-edge `2e + 1` its head end.
//! Each vertex lists its half-edges in counterclockwise order.

mod cover;
mod embedded;
mod homology;
mod intersect;

use std::collections::VecDeque;
use std::fmt::Write as _;

use thiserror::Error;

pub use cover::{dual_voltage, dual_voltage_with, voltage_cover, voltage_cover_from_sheet, Voltage};
pub use embedded::{build_carter, CrossingData, EmbeddedDiagram};
pub use homology::{homology_basis, surface_basis, SpanningTree};
pub use intersect::{intersect, intersect_with_lane_seed};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FatgraphError {
    #[error("malformed fatgraph: {0}")]
    Malformed(String),
    #[error("Euler characteristic has the wrong parity; the ribbon structure is corrupt")]
    OddEuler,
    #[error("fatgraph is disconnected")]
    Disconnected,
    #[error("path is not a closed path on the fatgraph")]
    PathNotOnGraph,
    #[error("the knot does not lift: traversal voltage is {0}")]
    DoesNotLift(i64),
}

/// An edge traversed in a direction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DirEdge {
    pub edge: usize,
    pub forward: bool,
}

impl DirEdge {
    pub fn forward(edge: usize) -> DirEdge {
        DirEdge { edge, forward: true }
    }

    pub fn reversed(self) -> DirEdge {
        DirEdge { edge: self.edge, forward: !self.forward }
    }

    /// Half-edge through which the path leaves the tail vertex.
    pub fn out_half(self) -> usize {
        2 * self.edge + usize::from(!self.forward)
    }

    /// Half-edge through which the path arrives at the head vertex.
    pub fn in_half(self) -> usize {
        2 * self.edge + usize::from(self.forward)
    }
}

/// A cyclic sequence of directed edges; consecutive edges meet at a vertex.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct EdgePath(pub Vec<DirEdge>);

impl EdgePath {
    pub fn new(edges: Vec<DirEdge>) -> EdgePath {
        EdgePath(edges)
    }

    pub fn edges(&self) -> &[DirEdge] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reversed(&self) -> EdgePath {
        EdgePath(self.0.iter().rev().map(|d| d.reversed()).collect())
    }

    /// Concatenation of two closed paths through a common vertex: `other` is
    /// rotated to start where `self` starts.
    pub fn splice(&self, other: &EdgePath, fg: &Fatgraph) -> Option<EdgePath> {
        if self.is_empty() {
            return Some(other.clone());
        }
        let v = fg.tail(self.0[0]);
        let k = other.0.iter().position(|d| fg.tail(*d) == v)?;
        let mut out = self.0.clone();
        out.extend(other.0[k..].iter().chain(&other.0[..k]));
        Some(EdgePath(out))
    }

    /// Signed number of times the path runs along `edge`.
    pub fn edge_count(&self, edge: usize) -> i64 {
        self.0.iter().filter(|d| d.edge == edge).map(|d| if d.forward { 1 } else { -1 }).sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fatgraph {
    rotation: Vec<Vec<usize>>,
    vertex_of: Vec<usize>,
    slot_of: Vec<usize>,
}

impl Fatgraph {
    /// Builds a fatgraph from counterclockwise half-edge orders. Every
    /// half-edge `0..2E` must occur exactly once.
    pub fn new(rotation: Vec<Vec<usize>>) -> Result<Fatgraph, FatgraphError> {
        let total: usize = rotation.iter().map(Vec::len).sum();
        if !total.is_multiple_of(2) {
            return Err(FatgraphError::Malformed("odd number of half-edges".into()));
        }
        let mut vertex_of = vec![usize::MAX; total];
        let mut slot_of = vec![usize::MAX; total];
        for (v, hs) in rotation.iter().enumerate() {
            for (k, &h) in hs.iter().enumerate() {
                if h >= total || vertex_of[h] != usize::MAX {
                    return Err(FatgraphError::Malformed(format!("half-edge {h} repeated or out of range")));
                }
                vertex_of[h] = v;
                slot_of[h] = k;
            }
        }
        Ok(Fatgraph { rotation, vertex_of, slot_of })
    }

    pub fn vertex_count(&self) -> usize {
        self.rotation.len()
    }

    pub fn edge_count(&self) -> usize {
        self.vertex_of.len() / 2
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn vertex_of(&self, half: usize) -> usize {
        self.vertex_of[half]
    }

    /// Position of a half-edge in its vertex's counterclockwise order.
    pub fn slot_of(&self, half: usize) -> usize {
        self.slot_of[half]
    }

    pub fn tail(&self, d: DirEdge) -> usize {
        self.vertex_of[d.out_half()]
    }

    pub fn head(&self, d: DirEdge) -> usize {
        self.vertex_of[d.in_half()]
    }

    /// Next half-edge counterclockwise at the same vertex.
    pub fn next_ccw(&self, half: usize) -> usize {
        let v = self.vertex_of[half];
        let r = &self.rotation[v];
        r[(self.slot_of[half] + 1) % r.len()]
    }

    /// Whether `path` is a closed path of existing edges.
    pub fn is_closed_path(&self, path: &EdgePath) -> bool {
        let e = path.edges();
        if e.iter().any(|d| d.edge >= self.edge_count()) {
            return false;
        }
        (0..e.len()).all(|k| self.head(e[k]) == self.tail(e[(k + 1) % e.len()]))
    }

    /// Connected components as lists of vertices.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.vertex_count()];
        let mut out = Vec::new();
        for start in 0..self.vertex_count() {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![start];
            comp[start] = id;
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &h in &self.rotation[v] {
                    let w = self.vertex_of[h ^ 1];
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                        queue.push_back(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Boundary cycles of the ribbon surface. Each face is listed by the
    /// half-edges through which its boundary leaves successive vertices; the
    /// boundary turns to the next counterclockwise half-edge at every corner.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_of.len();
        let mut seen = vec![false; n];
        let mut faces = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut face = Vec::new();
            let mut h = start;
            while !seen[h] {
                seen[h] = true;
                face.push(h);
                h = self.next_ccw(h ^ 1);
            }
            faces.push(face);
        }
        faces
    }

    /// A face boundary as a closed edge path.
    pub fn face_path(face: &[usize]) -> EdgePath {
        EdgePath(face.iter().map(|&h| DirEdge { edge: h / 2, forward: h % 2 == 0 }).collect())
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count() as i64 - self.edge_count() as i64 + self.faces().len() as i64
    }

    /// Total genus of the capped closed surface (summed over components).
    pub fn genus(&self) -> Result<usize, FatgraphError> {
        faces_and_genus(self).map(|(_, g)| g)
    }

    /// One line per vertex: `v: h h h ...` with half-edges written as
    /// `<edge>t` (tail end) or `<edge>h` (head end), counterclockwise.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        for (v, hs) in self.rotation.iter().enumerate() {
            let _ = write!(s, "{v}:");
            for &h in hs {
                let _ = write!(s, " {}{}", h / 2, if h % 2 == 0 { 't' } else { 'h' });
            }
            s.push('\n');
        }
        s
    }
}

/// Faces as corner cycles and the genus of the capped closed surface.
pub fn faces_and_genus(fg: &Fatgraph) -> Result<(Vec<Vec<usize>>, usize), FatgraphError> {
    let faces = fg.faces();
    let chi = fg.vertex_count() as i64 - fg.edge_count() as i64 + faces.len() as i64;
    let comps = fg.components().len() as i64;
    let twice_genus = 2 * comps - chi;
    if twice_genus < 0 || twice_genus % 2 != 0 {
        return Err(FatgraphError::OddEuler);
    }
    Ok((faces, (twice_genus / 2) as usize))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn circle() -> Fatgraph {
        Fatgraph::new(vec![vec![0, 1]]).unwrap()
    }

    #[test]
    fn circle_is_a_sphere() {
        let fg = circle();
        let (faces, g) = faces_and_genus(&fg).unwrap();
        assert_eq!(faces.len(), 2);
        assert_eq!(g, 0);
    }

    #[test]
    fn one_vertex_torus() {
        // two loops interleaved at one vertex: a, b, a', b'
        let fg = Fatgraph::new(vec![vec![0, 2, 1, 3]]).unwrap();
        assert_eq!(fg.faces().len(), 1);
        assert_eq!(fg.genus().unwrap(), 1);
    }

    #[test]
    fn malformed_rotation_is_rejected() {
        assert!(Fatgraph::new(vec![vec![0, 0]]).is_err());
        assert!(Fatgraph::new(vec![vec![0, 1, 2]]).is_err());
    }

    #[test]
    fn faces_partition_half_edges() {
        let fg = Fatgraph::new(vec![vec![0, 2, 5], vec![1, 4, 3]]).unwrap();
        let faces = fg.faces();
        let mut all: Vec<usize> = faces.concat();
        all.sort_unstable();
        assert_eq!(all, (0..6).collect::<Vec<_>>());
        for f in &faces {
            assert!(fg.is_closed_path(&Fatgraph::face_path(f)));
        }
    }

    #[test]
    fn dump_format() {
        assert_eq!(circle().dump(), "0: 0t 0h\n");
    }
}
