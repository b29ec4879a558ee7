//! Example diagrams: classical fixtures, the `alpha(p,q)` grid family, and
//! random codes for fuzzing.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::Sign;

use super::{DiagramError, Flag, GaussCode};

/// The two-crossing knot on the torus: a trefoil with one over-arc rerouted
/// through a handle.
pub fn torus_two_crossing() -> GaussCode {
    GaussCode::parse("O1+ O2+ U1+ U2+").expect("fixture")
}

/// Classical right-handed trefoil.
pub fn trefoil() -> GaussCode {
    GaussCode::parse("O1+ U2+ O3+ U1+ O2+ U3+").expect("fixture")
}

/// Classical figure-eight knot.
pub fn figure_eight() -> GaussCode {
    GaussCode::parse("O1+ U2- O3- U1+ O4+ U3- O2- U4+").expect("fixture")
}

/// The curve `alpha(p,q)` made into a knot by the sign function `signs`
/// (`signs[i]` is the sign of crossing `x{i+1}`).
///
/// The Gauss diagram has `p` parallel horizontal chords `x1..xp` and `q`
/// parallel vertical chords `x{p+1}..x{p+q}`, each horizontal chord crossing
/// each vertical one. The word runs `L1..Lp B1..Bq Rp..R1 Tq..T1`, where
/// `(Li, Ri)` are the ends of `xi` and `(Bj, Tj)` the ends of `x{p+j}`.
/// Horizontal chords point from `R` to `L`, vertical ones from `B` to `T`.
pub fn alpha_pq(p: usize, q: usize, signs: &[Sign]) -> Result<GaussCode, DiagramError> {
    if p == 0 || q == 0 || signs.len() != p + q {
        return Err(DiagramError::BadSignDomain { expected: p + q, got: signs.len() });
    }
    // every crossing has positive local orientation in this word
    let first_flag = |writhe: Sign| if writhe == Sign::Plus { Flag::Over } else { Flag::Under };
    let label = |k: usize| format!("x{}", k + 1);
    let mut tokens = Vec::with_capacity(2 * (p + q));
    for i in 0..p {
        tokens.push((label(i), first_flag(signs[i]), signs[i]));
    }
    for j in 0..q {
        let k = p + j;
        tokens.push((label(k), first_flag(signs[k]), signs[k]));
    }
    for i in (0..p).rev() {
        tokens.push((label(i), first_flag(signs[i]).toggled(), signs[i]));
    }
    for j in (0..q).rev() {
        let k = p + j;
        tokens.push((label(k), first_flag(signs[k]).toggled(), signs[k]));
    }
    GaussCode::from_tokens(tokens)
}

/// A uniformly shuffled Gauss word on `n` crossings with random flags and writhes.
pub fn random_code<R: Rng + ?Sized>(rng: &mut R, n: usize) -> GaussCode {
    let mut slots: Vec<usize> = (0..n).flat_map(|c| [c, c]).collect();
    slots.shuffle(rng);
    let over_first: Vec<bool> = (0..n).map(|_| rng.gen()).collect();
    let writhe: Vec<Sign> = (0..n).map(|_| if rng.gen() { Sign::Plus } else { Sign::Minus }).collect();
    let mut seen = vec![false; n];
    let tokens: Vec<(String, Flag, Sign)> = slots
        .into_iter()
        .map(|c| {
            let first = !seen[c];
            seen[c] = true;
            let flag = if first == over_first[c] { Flag::Over } else { Flag::Under };
            ((c + 1).to_string(), flag, writhe[c])
        })
        .collect();
    GaussCode::from_tokens(tokens).expect("random word is valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn alpha_word_shape() {
        let c = alpha_pq(2, 1, &[Sign::Plus; 3]).unwrap();
        assert_eq!(c.len(), 6);
        let order: Vec<&str> = c.word().iter().map(|p| c.label(p.crossing)).collect();
        assert_eq!(order, ["x1", "x2", "x3", "x2", "x1", "x3"]);
    }

    #[test]
    fn alpha_sign_domain() {
        assert_eq!(alpha_pq(2, 2, &[Sign::Plus; 3]), Err(DiagramError::BadSignDomain { expected: 4, got: 3 }));
        assert!(alpha_pq(0, 2, &[Sign::Plus; 2]).is_err());
    }

    #[test]
    fn alpha_writhes_follow_signs() {
        let signs = [Sign::Plus, Sign::Minus, Sign::Minus, Sign::Plus, Sign::Plus];
        let c = alpha_pq(2, 3, &signs).unwrap();
        for (k, s) in signs.iter().enumerate() {
            let x = c.crossing_by_label(&format!("x{}", k + 1)).unwrap();
            assert_eq!(c.writhe(x), *s);
        }
    }

    #[test]
    fn random_codes_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 0..7 {
            let c = random_code(&mut rng, n);
            assert_eq!(c.crossing_count(), n);
            assert_eq!(GaussCode::parse(&c.to_string()).unwrap(), c);
        }
    }
}
