//! Graded matrices: a pointed finite set `(G, s)` with a sign on every
//! element of `G - {s}` and a pairing `b: G x G -> R`, `R` being the integers
//! or a prime field.
//!
//! Element 0 is always the base element `s`; rows and columns of `b` follow
//! the element order.

mod filling;
mod genus;
mod iso;
mod random;
mod reduce;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::is_prime;
use crate::Sign;

pub use filling::{
    filling_matrix, is_cobordant, simple_fillings, tuple_fillings, tuple_genus_upper, CobordismVerdict, Filling,
    FillingVector, DEFAULT_COEFF_BOUND,
};
pub use genus::{gamma_a, genus, is_hyperbolic, p_genus, u_pm_of_matrix, HalfInteger, DEFAULT_SIZE_CAP};
pub use iso::{is_isomorphic, isomorphism};
pub use random::{apply_inverse_move, inflate, random_skew, InverseMove};
pub use reduce::{
    classify_elements, is_primitive, reduce_primitive, reduce_primitive_random, Classification, Deletion, ElementType,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GradedError {
    #[error("matrix is not skew-symmetric")]
    NotSkew,
    #[error("matrix is not normal: b(s,s) = {0}")]
    NotNormal(i64),
    #[error("matrix is not A-normal: b(s,s) = {0} is not in A")]
    NotANormal(i64),
    #[error("operation needs a matrix over the integers")]
    WrongRing,
    #[error("matrices live over different rings")]
    RingMismatch,
    #[error("{size} elements exceed the size cap of {cap}")]
    SizeCap { size: usize, cap: usize },
    #[error("malformed matrix: {0}")]
    Malformed(String),
}

/// Coefficient ring of a graded matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ring {
    Integers,
    /// Integers modulo a prime.
    ModP(u64),
}

impl Ring {
    /// Canonical representative: unchanged over the integers, in `0..p` mod `p`.
    pub fn reduce(self, x: i64) -> i64 {
        match self {
            Ring::Integers => x,
            Ring::ModP(p) => x.rem_euclid(p as i64),
        }
    }

    pub fn is_zero(self, x: i64) -> bool {
        self.reduce(x) == 0
    }

    pub fn neg(self, x: i64) -> i64 {
        self.reduce(-x)
    }

    pub fn rank(self, rows: &[Vec<i64>]) -> usize {
        match self {
            Ring::Integers => crate::linalg::rank_integer(rows),
            Ring::ModP(p) => crate::linalg::rank_mod_p(rows, p),
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Integers => f.write_str("Z"),
            Ring::ModP(p) => write!(f, "Z/{p}"),
        }
    }
}

impl std::str::FromStr for Ring {
    type Err = GradedError;

    fn from_str(s: &str) -> Result<Ring, GradedError> {
        if s == "Z" {
            return Ok(Ring::Integers);
        }
        match s.strip_prefix("Z/").and_then(|p| p.parse::<u64>().ok()) {
            Some(p) if is_prime(p) => Ok(Ring::ModP(p)),
            _ => Err(GradedError::Malformed(format!("unknown ring `{s}`"))),
        }
    }
}

/// A non-base element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Element {
    pub name: String,
    pub sign: Sign,
}

impl Element {
    pub fn new(name: impl Into<String>, sign: Sign) -> Element {
        Element { name: name.into(), sign }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedMatrix {
    elements: Vec<Element>,
    b: Vec<Vec<i64>>,
    ring: Ring,
}

impl GradedMatrix {
    /// `b` is indexed by `0 = s` followed by `elements` in order.
    pub fn new(elements: Vec<Element>, b: Vec<Vec<i64>>, ring: Ring) -> Result<GradedMatrix, GradedError> {
        let n = elements.len() + 1;
        if b.len() != n || b.iter().any(|r| r.len() != n) {
            return Err(GradedError::Malformed(format!("pairing must be {n}x{n}")));
        }
        if let Ring::ModP(p) = ring {
            if !is_prime(p) {
                return Err(GradedError::Malformed(format!("{p} is not prime")));
            }
        }
        let b = b.into_iter().map(|r| r.into_iter().map(|x| ring.reduce(x)).collect()).collect();
        Ok(GradedMatrix { elements, b, ring })
    }

    /// The graded matrix with `G = {s}` and `b(s,s) = 0`.
    pub fn trivial() -> GradedMatrix {
        GradedMatrix { elements: Vec::new(), b: vec![vec![0]], ring: Ring::Integers }
    }

    /// Number of elements of `G`, counting `s`.
    pub fn size(&self) -> usize {
        self.b.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.is_empty() && self.ring.is_zero(self.b[0][0])
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    /// Name of element `i`, `s` for the base element.
    pub fn name(&self, i: usize) -> &str {
        if i == 0 {
            "s"
        } else {
            &self.elements[i - 1].name
        }
    }

    /// Sign of a non-base element `i >= 1`.
    pub fn sign(&self, i: usize) -> Sign {
        self.elements[i - 1].sign
    }

    pub fn b(&self, i: usize, j: usize) -> i64 {
        self.b[i][j]
    }

    pub fn pairing(&self) -> &[Vec<i64>] {
        &self.b
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        if name == "s" {
            return Some(0);
        }
        self.elements.iter().position(|e| e.name == name).map(|k| k + 1)
    }

    pub fn is_skew(&self) -> bool {
        let n = self.size();
        (0..n)
            .all(|i| self.ring.is_zero(self.b[i][i]) && (0..i).all(|j| self.ring.is_zero(self.b[i][j] + self.b[j][i])))
    }

    pub fn is_normal(&self) -> bool {
        self.ring.is_zero(self.b[0][0])
    }

    /// `-T`: signs swapped, pairing negated.
    pub fn neg(&self) -> GradedMatrix {
        let ring = self.ring;
        GradedMatrix {
            elements: self.elements.iter().map(|e| Element::new(e.name.clone(), -e.sign)).collect(),
            b: self.b.iter().map(|r| r.iter().map(|&x| ring.neg(x)).collect()).collect(),
            ring,
        }
    }

    /// `T^-`: the `s` row and column are negated and every other entry
    /// `b(g,h)` becomes `b(g,h) - b(g,s) - b(s,h)`.
    pub fn bar(&self) -> GradedMatrix {
        let n = self.size();
        let b = &self.b;
        let nb = (0..n)
            .map(|g| {
                (0..n)
                    .map(|h| match (g, h) {
                        (0, _) | (_, 0) => -b[g][h],
                        _ => b[g][h] - b[g][0] - b[0][h],
                    })
                    .map(|x| self.ring.reduce(x))
                    .collect()
            })
            .collect();
        GradedMatrix { elements: self.elements.clone(), b: nb, ring: self.ring }
    }

    /// The same matrix over `Z/p`.
    pub fn reduce_mod(&self, p: u64) -> Result<GradedMatrix, GradedError> {
        if self.ring != Ring::Integers {
            return Err(GradedError::WrongRing);
        }
        GradedMatrix::new(self.elements.clone(), self.b.clone(), Ring::ModP(p))
    }

    /// Restriction to the elements `keep` (indices into `G`; must contain 0
    /// first), preserving order.
    pub fn restrict(&self, keep: &[usize]) -> GradedMatrix {
        debug_assert_eq!(keep.first(), Some(&0));
        GradedMatrix {
            elements: keep[1..].iter().map(|&i| self.elements[i - 1].clone()).collect(),
            b: keep.iter().map(|&i| keep.iter().map(|&j| self.b[i][j]).collect()).collect(),
            ring: self.ring,
        }
    }

    /// Removes the given non-base elements.
    pub fn delete(&self, remove: &[usize]) -> GradedMatrix {
        let keep: Vec<usize> = (0..self.size()).filter(|i| !remove.contains(i)).collect();
        self.restrict(&keep)
    }

    /// Appends a non-base element with the given row `b(g, .)` and column
    /// `b(., g)`, both indexed over the enlarged set (last entry is `b(g,g)`).
    pub fn extend(&self, element: Element, row: &[i64], col: &[i64]) -> GradedMatrix {
        let n = self.size();
        assert!(row.len() == n + 1 && col.len() == n + 1 && row[n] == col[n]);
        let mut b: Vec<Vec<i64>> = self.b.to_vec();
        for (i, r) in b.iter_mut().enumerate() {
            r.push(self.ring.reduce(col[i]));
        }
        b.push(row.iter().map(|&x| self.ring.reduce(x)).collect());
        let mut elements = self.elements.clone();
        elements.push(element);
        GradedMatrix { elements, b, ring: self.ring }
    }

    /// Elements sorted by `(sign, name)`, the order used for serialization.
    pub fn canonical(&self) -> GradedMatrix {
        let mut order: Vec<usize> = (1..self.size()).collect();
        order.sort_by(|&i, &j| {
            let (a, b) = (&self.elements[i - 1], &self.elements[j - 1]);
            (a.sign.value(), &a.name).cmp(&(b.sign.value(), &b.name))
        });
        order.insert(0, 0);
        self.restrict(&order)
    }

    pub fn with_names(&self, names: impl IntoIterator<Item = String>) -> GradedMatrix {
        let mut out = self.clone();
        for (e, n) in out.elements.iter_mut().zip(names) {
            e.name = n;
        }
        out
    }

    pub fn forget_bipartition(&self) -> BasedMatrix {
        BasedMatrix {
            names: (0..self.size()).map(|i| self.name(i).to_string()).collect(),
            b: self.b.clone(),
            ring: self.ring,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(MatrixJson::from(&self.canonical())).expect("matrix serializes")
    }

    pub fn from_json(text: &str) -> Result<GradedMatrix, GradedError> {
        let raw: MatrixJson = serde_json::from_str(text).map_err(|e| GradedError::Malformed(e.to_string()))?;
        GradedMatrix::new(raw.elements, raw.b, raw.ring.parse()?)
    }
}

/// A pointed set with a pairing and no bipartition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasedMatrix {
    pub names: Vec<String>,
    pub b: Vec<Vec<i64>>,
    pub ring: Ring,
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    elements: Vec<Element>,
    b: Vec<Vec<i64>>,
    ring: String,
}

impl From<&GradedMatrix> for MatrixJson {
    fn from(t: &GradedMatrix) -> MatrixJson {
        MatrixJson { elements: t.elements.clone(), b: t.b.clone(), ring: t.ring.to_string() }
    }
}

impl fmt::Display for GradedMatrix {
    /// A labelled table, one row per element, `s` first; signs in the row label.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = (0..self.size())
            .map(|i| if i == 0 { "s".to_string() } else { format!("{}{}", self.name(i), self.sign(i).symbol()) })
            .collect();
        let lw = labels.iter().map(String::len).max().unwrap_or(1);
        let cw = self
            .b
            .iter()
            .flatten()
            .map(|x| x.to_string().len())
            .chain(labels.iter().map(String::len))
            .max()
            .unwrap_or(1);
        write!(f, "{:lw$}", "")?;
        for l in &labels {
            write!(f, " {l:>cw$}")?;
        }
        writeln!(f)?;
        for (l, row) in labels.iter().zip(&self.b) {
            write!(f, "{l:lw$}")?;
            for x in row {
                write!(f, " {x:>cw$}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// The graded matrix of the two-crossing knot on the torus.
pub fn two_crossing_matrix() -> GradedMatrix {
    GradedMatrix::new(
        vec![Element::new("x", Sign::Plus), Element::new("y", Sign::Plus)],
        vec![vec![0, -1, 1], vec![1, 0, 1], vec![-1, -1, 0]],
        Ring::Integers,
    )
    .expect("fixture")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn involutions() {
        let t = two_crossing_matrix();
        assert_eq!(t.neg().neg(), t);
        assert_eq!(t.bar().bar(), t);
        assert_eq!(t.neg().bar(), t.bar().neg());
        assert_eq!(GradedMatrix::trivial().neg(), GradedMatrix::trivial());
        assert_eq!(GradedMatrix::trivial().bar(), GradedMatrix::trivial());
    }

    #[test]
    fn bar_of_two_crossing_matrix() {
        let tb = two_crossing_matrix().bar();
        let (x, y) = (1, 2);
        assert_eq!(tb.b(x, y), -1);
        assert_eq!(tb.b(0, x), 1);
        assert_eq!(tb.b(0, y), -1);
        assert!(tb.is_skew());
    }

    #[test]
    fn json_round_trip() {
        let t = two_crossing_matrix();
        let text = t.to_json().to_string();
        assert_eq!(
            text,
            r#"{"elements":[{"name":"x","sign":1},{"name":"y","sign":1}],"b":[[0,-1,1],[1,0,1],[-1,-1,0]],"ring":"Z"}"#
        );
        assert_eq!(GradedMatrix::from_json(&text).unwrap(), t);
        assert!(GradedMatrix::from_json(r#"{"elements":[],"b":[[0]],"ring":"Z/4"}"#).is_err());
    }

    #[test]
    fn canonical_order() {
        let t = GradedMatrix::new(
            vec![Element::new("b", Sign::Plus), Element::new("a", Sign::Minus), Element::new("a", Sign::Plus)],
            vec![vec![0, 1, 2, 3], vec![-1, 0, 4, 5], vec![-2, -4, 0, 6], vec![-3, -5, -6, 0]],
            Ring::Integers,
        )
        .unwrap();
        let c = t.canonical();
        let order: Vec<(String, i64)> = c.elements().iter().map(|e| (e.name.clone(), e.sign.value())).collect();
        assert_eq!(order, [("a".to_string(), -1), ("a".to_string(), 1), ("b".to_string(), 1)]);
        assert_eq!(c.b(0, 1), 2);
        assert_eq!(c.b(1, 3), -4);
    }

    #[test]
    fn mod_p_reduction() {
        let t = two_crossing_matrix().reduce_mod(2).unwrap();
        assert_eq!(t.b(0, 1), 1);
        assert!(t.is_skew());
        assert_eq!(t.ring().to_string(), "Z/2");
    }

    #[test]
    fn forget_drops_signs_only() {
        let t = two_crossing_matrix();
        let based = t.forget_bipartition();
        assert_eq!(based.b, t.pairing());
        assert_eq!(t.neg().forget_bipartition().b[0][1], 1);
        assert_eq!(t.neg().neg().forget_bipartition(), based);
    }
}
