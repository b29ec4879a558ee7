//! Random skew-symmetric matrices and the inverse moves `M1^-1`, `M2^-1`,
//! `M3^-1` that inflate a matrix within its homology class.

use rand::Rng;

use super::{Element, GradedMatrix, Ring};
use crate::Sign;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InverseMove {
    /// Adds an element with zero row.
    M1,
    /// Adds an element whose row equals the row of `s`.
    M2,
    /// Adds a complementary pair.
    M3,
}

fn random_sign<R: Rng + ?Sized>(rng: &mut R) -> Sign {
    if rng.gen() {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

/// A skew-symmetric integer matrix with `n` non-base elements `g1..gn`,
/// random signs and entries in `[-max_entry, max_entry]`.
pub fn random_skew<R: Rng + ?Sized>(rng: &mut R, n: usize, max_entry: i64) -> GradedMatrix {
    let size = n + 1;
    let mut b = vec![vec![0i64; size]; size];
    for i in 0..size {
        for j in i + 1..size {
            let x = rng.gen_range(-max_entry..=max_entry);
            b[i][j] = x;
            b[j][i] = -x;
        }
    }
    let elements = (1..=n).map(|k| Element::new(format!("g{k}"), random_sign(rng))).collect();
    GradedMatrix::new(elements, b, Ring::Integers).expect("square")
}

fn fresh_name(t: &GradedMatrix) -> String {
    (1..).map(|k| format!("n{k}")).find(|n| t.index_of(n).is_none()).expect("unbounded")
}

/// Applies one inverse move to a skew-symmetric matrix. New entries that the
/// move leaves free are drawn from `[-max_entry, max_entry]`.
pub fn apply_inverse_move<R: Rng + ?Sized>(
    rng: &mut R,
    t: &GradedMatrix,
    mv: InverseMove,
    max_entry: i64,
) -> GradedMatrix {
    let n = t.size();
    let s_row: Vec<i64> = (0..n).map(|h| t.b(0, h)).collect();
    match mv {
        InverseMove::M1 => {
            let zeros = vec![0; n + 1];
            t.extend(Element::new(fresh_name(t), random_sign(rng)), &zeros, &zeros)
        }
        InverseMove::M2 => {
            // b(g,h) = b(s,h) for all h, including b(g,s) = b(s,s) = 0 and b(g,g) = 0
            let mut row = s_row.clone();
            row.push(0);
            let col: Vec<i64> = row.iter().map(|x| -x).collect();
            t.extend(Element::new(fresh_name(t), random_sign(rng)), &row, &col)
        }
        InverseMove::M3 => {
            // b(g1,h) free for h in G; b(g2,h) = b(s,h) - b(g1,h); b(g1,g2) = b(g1,s)
            let sign = random_sign(rng);
            let mut row1: Vec<i64> = (0..n).map(|_| rng.gen_range(-max_entry..=max_entry)).collect();
            row1.push(0);
            let col1: Vec<i64> = row1.iter().map(|x| -x).collect();
            let t1 = t.extend(Element::new(fresh_name(t), sign), &row1, &col1);
            let mut row2: Vec<i64> = (0..n).map(|h| s_row[h] - row1[h]).collect();
            row2.push(-row1[0]);
            row2.push(0);
            let col2: Vec<i64> = row2.iter().map(|x| -x).collect();
            t1.extend(Element::new(fresh_name(&t1), -sign), &row2, &col2)
        }
    }
}

/// Applies `k` random inverse moves.
pub fn inflate<R: Rng + ?Sized>(
    rng: &mut R,
    t: &GradedMatrix,
    k: usize,
    max_entry: i64,
) -> (GradedMatrix, Vec<InverseMove>) {
    let mut cur = t.clone();
    let mut moves = Vec::with_capacity(k);
    for _ in 0..k {
        let mv = [InverseMove::M1, InverseMove::M2, InverseMove::M3][rng.gen_range(0..3)];
        cur = apply_inverse_move(rng, &cur, mv, max_entry);
        moves.push(mv);
    }
    (cur, moves)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::{classify_elements, reduce_primitive, two_crossing_matrix, ElementType};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn moves_add_the_intended_elements() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let t = two_crossing_matrix();
        let m1 = apply_inverse_move(&mut rng, &t, InverseMove::M1, 3);
        assert_eq!(classify_elements(&m1).unwrap().types[2], ElementType::Type1);
        let m2 = apply_inverse_move(&mut rng, &t, InverseMove::M2, 3);
        assert!(m2.is_skew());
        assert_eq!(classify_elements(&m2).unwrap().types[2], ElementType::Type2);
        let m3 = apply_inverse_move(&mut rng, &t, InverseMove::M3, 3);
        assert!(m3.is_skew());
        assert!(classify_elements(&m3).unwrap().complementary.contains(&(3, 4)));
    }

    #[test]
    fn inflation_reduces_back() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let t = two_crossing_matrix();
        for _ in 0..20 {
            let (big, moves) = inflate(&mut rng, &t, 6, 2);
            assert_eq!(moves.len(), 6);
            assert!(big.is_skew());
            let (p, _) = reduce_primitive(&big).unwrap();
            assert!(crate::graded::is_isomorphic(&p, &t));
        }
    }

    #[test]
    fn random_skew_is_skew() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for n in 0..8 {
            assert!(random_skew(&mut rng, n, 3).is_skew());
        }
    }
}
