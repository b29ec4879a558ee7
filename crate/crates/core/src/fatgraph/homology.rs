//! Cycle bases: fundamental cycles of a spanning tree, and a tree-cotree
//! basis of the first homology of the capped surface.

use std::collections::VecDeque;

use super::{DirEdge, EdgePath, Fatgraph, FatgraphError};

/// A breadth-first spanning tree rooted at vertex 0.
#[derive(Clone, Debug)]
pub struct SpanningTree {
    /// Tree edge entering each vertex, directed away from the root.
    parent: Vec<Option<DirEdge>>,
    depth: Vec<usize>,
    in_tree: Vec<bool>,
}

impl SpanningTree {
    pub fn new(fg: &Fatgraph) -> Result<SpanningTree, FatgraphError> {
        let n = fg.vertex_count();
        let mut parent = vec![None; n];
        let mut depth = vec![usize::MAX; n];
        let mut in_tree = vec![false; fg.edge_count()];
        if n == 0 {
            return Ok(SpanningTree { parent, depth, in_tree });
        }
        depth[0] = 0;
        let mut queue = VecDeque::from([0usize]);
        while let Some(v) = queue.pop_front() {
            for &h in fg.rotation(v) {
                let w = fg.vertex_of(h ^ 1);
                if depth[w] == usize::MAX {
                    depth[w] = depth[v] + 1;
                    let d = DirEdge { edge: h / 2, forward: h % 2 == 0 };
                    parent[w] = Some(d);
                    in_tree[d.edge] = true;
                    queue.push_back(w);
                }
            }
        }
        if depth.contains(&usize::MAX) {
            return Err(FatgraphError::Disconnected);
        }
        Ok(SpanningTree { parent, depth, in_tree })
    }

    pub fn contains(&self, edge: usize) -> bool {
        self.in_tree[edge]
    }

    /// Tree path from `from` to `to` through their lowest common ancestor.
    pub fn path(&self, fg: &Fatgraph, from: usize, to: usize) -> Vec<DirEdge> {
        let (mut x, mut y) = (from, to);
        let mut up = Vec::new();
        let mut down = Vec::new();
        while self.depth[x] > self.depth[y] {
            let d = self.parent[x].expect("non-root");
            up.push(d.reversed());
            x = fg.tail(d);
        }
        while self.depth[y] > self.depth[x] {
            let d = self.parent[y].expect("non-root");
            down.push(d);
            y = fg.tail(d);
        }
        while x != y {
            let dx = self.parent[x].expect("non-root");
            let dy = self.parent[y].expect("non-root");
            up.push(dx.reversed());
            down.push(dy);
            x = fg.tail(dx);
            y = fg.tail(dy);
        }
        down.reverse();
        up.extend(down);
        up
    }

    /// The fundamental cycle of a non-tree edge: the edge followed by the
    /// tree path back to its tail.
    pub fn fundamental_cycle(&self, fg: &Fatgraph, edge: usize) -> EdgePath {
        let d = DirEdge::forward(edge);
        let mut cycle = vec![d];
        cycle.extend(self.path(fg, fg.head(d), fg.tail(d)));
        EdgePath::new(cycle)
    }

    /// Non-tree edges in increasing order.
    pub fn cotree_edges(&self) -> Vec<usize> {
        (0..self.in_tree.len()).filter(|&e| !self.in_tree[e]).collect()
    }
}

/// Fundamental cycles `z_e`, one per non-tree edge, in edge order.
pub fn homology_basis(fg: &Fatgraph) -> Result<Vec<EdgePath>, FatgraphError> {
    let tree = SpanningTree::new(fg)?;
    Ok(tree.cotree_edges().into_iter().map(|e| tree.fundamental_cycle(fg, e)).collect())
}

/// `2g` cycles whose classes form a basis of `H_1` of the capped surface.
///
/// Edges outside a spanning tree and outside a spanning tree of the dual graph
/// (built from the remaining edges) each give one generator.
pub fn surface_basis(fg: &Fatgraph) -> Result<Vec<EdgePath>, FatgraphError> {
    let tree = SpanningTree::new(fg)?;
    let faces = fg.faces();
    let mut face_of = vec![0usize; 2 * fg.edge_count()];
    for (f, face) in faces.iter().enumerate() {
        for &h in face {
            face_of[h] = f;
        }
    }
    let mut in_cotree = vec![false; fg.edge_count()];
    let mut seen = vec![false; faces.len()];
    if !faces.is_empty() {
        seen[0] = true;
        let mut queue = VecDeque::from([0usize]);
        while let Some(f) = queue.pop_front() {
            for &h in &faces[f] {
                let e = h / 2;
                if tree.contains(e) {
                    continue;
                }
                let g = face_of[h ^ 1];
                if !seen[g] {
                    seen[g] = true;
                    in_cotree[e] = true;
                    queue.push_back(g);
                }
            }
        }
    }
    Ok(tree.cotree_edges().into_iter().filter(|&e| !in_cotree[e]).map(|e| tree.fundamental_cycle(fg, e)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fatgraph::intersect;

    #[test]
    fn cycle_count() {
        let fg = Fatgraph::new(vec![vec![0, 2, 5], vec![1, 4, 3]]).unwrap();
        let basis = homology_basis(&fg).unwrap();
        assert_eq!(basis.len(), 3 - 2 + 1);
        for z in &basis {
            assert!(fg.is_closed_path(z));
        }
    }

    #[test]
    fn torus_surface_basis_is_symplectic() {
        let fg = Fatgraph::new(vec![vec![0, 2, 1, 3]]).unwrap();
        let b = surface_basis(&fg).unwrap();
        assert_eq!(b.len(), 2);
        assert_eq!(intersect(&fg, &b[0], &b[1]).unwrap().abs(), 1);
    }

    #[test]
    fn disconnected_has_no_basis() {
        let fg = Fatgraph::new(vec![vec![0, 1], vec![2, 3]]).unwrap();
        assert_eq!(homology_basis(&fg), Err(FatgraphError::Disconnected));
    }
}
