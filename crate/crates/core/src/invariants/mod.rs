//! Invariants of a diagram: its distinguished halves, the polynomials
//! `u+`/`u-`, the graded matrix `T(D)` and the same data for covering knots.

mod poly;

use serde::Serialize;
use thiserror::Error;

use crate::fatgraph::{dual_voltage, intersect, voltage_cover, EdgePath, EmbeddedDiagram, FatgraphError};
use crate::graded::{reduce_primitive, Element, GradedMatrix, Ring};
use crate::Sign;

pub use poly::{LaurentFreePolynomial, PolyParseError};

/// Default cap on the number of crossings of an iterated covering.
pub const DEFAULT_MAX_CROSSINGS: usize = 512;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantsError {
    #[error(transparent)]
    Fatgraph(#[from] FatgraphError),
    /// The full preimage of the diagram in an iterated covering would have
    /// more than `cap` crossings.
    #[error("covering would carry {crossings} lifted crossings, over the cap of {cap}")]
    ResourceLimit { crossings: usize, cap: usize },
}

/// The distinguished half `D_x` at a crossing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Half {
    pub label: String,
    #[serde(skip)]
    pub path: EdgePath,
    pub sign: Sign,
    /// `D_x . D`.
    pub n: i64,
}

/// One half per crossing, in order of first visit. `D_x` leaves the crossing
/// along the branch that comes first in a positive frame and follows the
/// diagram back to the crossing.
pub fn halves(d: &EmbeddedDiagram) -> Vec<Half> {
    let fg = d.fatgraph();
    let trav = d.traversal().edges();
    let len = trav.len();
    d.crossings()
        .iter()
        .map(|c| {
            let (k1, k2) = c.visits;
            let (start, stop) = match c.local_orientation() {
                Sign::Plus => (k1, k2),
                Sign::Minus => (k2, k1 + len),
            };
            let path = EdgePath::new((start..stop).map(|k| trav[k % len]).collect());
            let n = intersect(fg, &path, d.traversal()).expect("halves lie on the surface");
            Half { label: c.label.clone(), path, sign: c.writhe, n }
        })
        .collect()
}

/// `u+ = sum_{sign +, n > 0} t^n - sum_{sign -, n < 0} t^-n` and
/// `u- = sum_{sign +, n < 0} t^-n - sum_{sign -, n > 0} t^n`.
pub fn u_polynomials(d: &EmbeddedDiagram) -> (LaurentFreePolynomial, LaurentFreePolynomial) {
    u_from_halves(&halves(d))
}

pub fn u_from_halves(hs: &[Half]) -> (LaurentFreePolynomial, LaurentFreePolynomial) {
    let mut plus = LaurentFreePolynomial::zero();
    let mut minus = LaurentFreePolynomial::zero();
    for h in hs {
        if h.n == 0 {
            continue;
        }
        let exp = u32::try_from(h.n.unsigned_abs()).expect("intersection number fits in u32");
        match (h.sign, h.n > 0) {
            (Sign::Plus, true) => plus.add_term(exp, 1),
            (Sign::Minus, false) => plus.add_term(exp, -1),
            (Sign::Plus, false) => minus.add_term(exp, 1),
            (Sign::Minus, true) => minus.add_term(exp, -1),
        }
    }
    (plus, minus)
}

/// `T(D)`: `s` and one element per crossing, signed by writhe, with
/// `b(g,h)` the intersection number of the corresponding loops (the whole
/// diagram for `s`, the half `D_x` for a crossing `x`).
pub fn graded_matrix_of(d: &EmbeddedDiagram) -> GradedMatrix {
    let hs = halves(d);
    let fg = d.fatgraph();
    let paths: Vec<&EdgePath> = std::iter::once(d.traversal()).chain(hs.iter().map(|h| &h.path)).collect();
    let n = paths.len();
    let mut b = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let x = intersect(fg, paths[i], paths[j]).expect("loops lie on the surface");
            b[i][j] = x;
            b[j][i] = -x;
        }
    }
    let elements = hs.iter().map(|h| Element::new(h.label.clone(), h.sign)).collect();
    GradedMatrix::new(elements, b, Ring::Integers).expect("square pairing")
}

/// The `m`-th covering knot `K^(m)`: the lift to the cyclic covering dual to
/// the class of the knot itself.
pub fn self_cover(d: &EmbeddedDiagram, m: u32) -> EmbeddedDiagram {
    let c = dual_voltage(d.fatgraph(), d.traversal(), m).expect("Carter surfaces are connected");
    // [D].[D] = 0, so the knot always lifts
    voltage_cover(d, &c).expect("self-intersection vanishes")
}

/// The knot `K_h`: the lift to the covering dual to `h` mod `m`.
pub fn class_cover(d: &EmbeddedDiagram, h: &EdgePath, m: u32) -> Result<EmbeddedDiagram, FatgraphError> {
    let c = dual_voltage(d.fatgraph(), h, m)?;
    voltage_cover(d, &c)
}

/// `u+`, `u-` and `T_bullet` of an iterated covering knot.
#[derive(Clone, Debug)]
pub struct HigherInvariants {
    pub covers: Vec<u32>,
    pub diagram: EmbeddedDiagram,
    pub u_plus: LaurentFreePolynomial,
    pub u_minus: LaurentFreePolynomial,
    pub primitive: GradedMatrix,
}

/// Iterates [`self_cover`] along `ms` and computes the invariants of the result.
pub fn higher_invariants(
    d: &EmbeddedDiagram,
    ms: &[u32],
    max_crossings: usize,
) -> Result<HigherInvariants, InvariantsError> {
    let mut cur = d.clone();
    for &m in ms {
        let predicted = cur.fatgraph().vertex_count() * m as usize;
        if predicted > max_crossings {
            return Err(InvariantsError::ResourceLimit { crossings: predicted, cap: max_crossings });
        }
        cur = self_cover(&cur, m);
    }
    let (u_plus, u_minus) = u_polynomials(&cur);
    let (primitive, _) = reduce_primitive(&graded_matrix_of(&cur)).expect("T(D) is skew");
    Ok(HigherInvariants { covers: ms.to_vec(), diagram: cur, u_plus, u_minus, primitive })
}
