//! Type 1 / type 2 elements, complementary pairs, and reduction to a
//! primitive matrix.

use rand::Rng;
use serde::Serialize;

use super::{GradedError, GradedMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ElementType {
    /// `b(g, h) = 0` for all `h`.
    Type1,
    /// `b(g, h) = b(s, h)` for all `h`.
    Type2,
    None,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    /// Tag of each non-base element, in element order (index `i - 1` for element `i`).
    pub types: Vec<ElementType>,
    /// Complementary pairs `(g1, g2)` with `g1 < g2`, as element indices.
    pub complementary: Vec<(usize, usize)>,
}

/// One deletion step of the reduction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "move", rename_all = "lowercase")]
pub enum Deletion {
    Type1 { element: String },
    Type2 { element: String },
    Pair { first: String, second: String },
}

fn is_type1(t: &GradedMatrix, g: usize) -> bool {
    (0..t.size()).all(|h| t.ring().is_zero(t.b(g, h)))
}

fn is_type2(t: &GradedMatrix, g: usize) -> bool {
    (0..t.size()).all(|h| t.ring().is_zero(t.b(g, h) - t.b(0, h)))
}

fn is_complementary(t: &GradedMatrix, g1: usize, g2: usize) -> bool {
    t.sign(g1) != t.sign(g2) && (0..t.size()).all(|h| t.ring().is_zero(t.b(g1, h) + t.b(g2, h) - t.b(0, h)))
}

pub fn classify_elements(t: &GradedMatrix) -> Result<Classification, GradedError> {
    if !t.is_skew() {
        return Err(GradedError::NotSkew);
    }
    let n = t.size();
    let types = (1..n)
        .map(|g| {
            if is_type1(t, g) {
                ElementType::Type1
            } else if is_type2(t, g) {
                ElementType::Type2
            } else {
                ElementType::None
            }
        })
        .collect();
    let complementary =
        (1..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).filter(|&(a, b)| is_complementary(t, a, b)).collect();
    Ok(Classification { types, complementary })
}

/// All deletions applicable to `t`, in canonical order.
fn candidates(t: &GradedMatrix) -> Vec<Vec<usize>> {
    let n = t.size();
    let mut out: Vec<Vec<usize>> = (1..n).filter(|&g| is_type1(t, g) || is_type2(t, g)).map(|g| vec![g]).collect();
    for a in 1..n {
        for b in a + 1..n {
            if is_complementary(t, a, b) {
                out.push(vec![a, b]);
            }
        }
    }
    out
}

fn describe(t: &GradedMatrix, del: &[usize]) -> Deletion {
    match *del {
        [g] if is_type1(t, g) => Deletion::Type1 { element: t.name(g).to_string() },
        [g] => Deletion::Type2 { element: t.name(g).to_string() },
        [a, b] => Deletion::Pair { first: t.name(a).to_string(), second: t.name(b).to_string() },
        _ => unreachable!("deletions remove one or two elements"),
    }
}

/// Deletes type 1 elements, type 2 elements and complementary pairs until
/// none remain, always taking the first applicable deletion (type 1, then
/// type 2, then pairs, each in element order). Returns the primitive matrix
/// and the deletion sequence.
pub fn reduce_primitive(t: &GradedMatrix) -> Result<(GradedMatrix, Vec<Deletion>), GradedError> {
    reduce_with(t, |_| 0)
}

/// Same as [`reduce_primitive`] with every deletion chosen uniformly at
/// random among the applicable ones.
pub fn reduce_primitive_random<R: Rng + ?Sized>(
    t: &GradedMatrix,
    rng: &mut R,
) -> Result<(GradedMatrix, Vec<Deletion>), GradedError> {
    reduce_with(t, |c| rng.gen_range(0..c.len()))
}

fn reduce_with(
    t: &GradedMatrix,
    mut choose: impl FnMut(&[Vec<usize>]) -> usize,
) -> Result<(GradedMatrix, Vec<Deletion>), GradedError> {
    if !t.is_skew() {
        return Err(GradedError::NotSkew);
    }
    let mut cur = t.clone();
    let mut steps = Vec::new();
    loop {
        let mut c = candidates(&cur);
        if c.is_empty() {
            return Ok((cur, steps));
        }
        // type 1 before type 2, in element order
        c.sort_by_key(|d| (d.len(), u8::from(d.len() == 1 && !is_type1(&cur, d[0])), d.clone()));
        let k = choose(&c);
        let del = c.swap_remove(k);
        steps.push(describe(&cur, &del));
        cur = cur.delete(&del);
    }
}

/// Whether `t` is skew-symmetric with nothing left to delete.
pub fn is_primitive(t: &GradedMatrix) -> bool {
    t.is_skew() && candidates(t).is_empty()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::{two_crossing_matrix, Element, Ring};
    use crate::Sign;

    #[test]
    fn matrix_two_is_primitive() {
        let t = two_crossing_matrix();
        let c = classify_elements(&t).unwrap();
        assert!(c.types.iter().all(|&k| k == ElementType::None));
        assert!(c.complementary.is_empty());
        let (p, steps) = reduce_primitive(&t).unwrap();
        assert_eq!(p, t);
        assert!(steps.is_empty());
        assert!(is_primitive(&t));
    }

    #[test]
    fn zero_row_is_type1() {
        let t = two_crossing_matrix();
        let g = t.extend(Element::new("g", Sign::Minus), &[0, 0, 0, 0], &[0, 0, 0, 0]);
        let c = classify_elements(&g).unwrap();
        assert_eq!(c.types, [ElementType::None, ElementType::None, ElementType::Type1]);
        let (p, steps) = reduce_primitive(&g).unwrap();
        assert_eq!(p, t);
        assert_eq!(steps, [Deletion::Type1 { element: "g".into() }]);
    }

    #[test]
    fn non_skew_is_rejected() {
        let t = GradedMatrix::new(vec![], vec![vec![1]], Ring::Integers).unwrap();
        assert_eq!(classify_elements(&t), Err(GradedError::NotSkew));
    }

    #[test]
    fn trivial_reduces_to_itself() {
        let (p, _) = reduce_primitive(&GradedMatrix::trivial()).unwrap();
        assert!(p.is_trivial());
    }
}
