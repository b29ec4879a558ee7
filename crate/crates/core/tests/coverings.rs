use knotcob::diagram::{alpha_pq, random_code, torus_two_crossing, GaussCode};
use knotcob::fatgraph::build_carter;
use knotcob::graded::{is_isomorphic, reduce_primitive};
use knotcob::invariants::{graded_matrix_of, halves, higher_invariants, self_cover, DEFAULT_MAX_CROSSINGS};
use knotcob::Sign;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// The sub-word of crossings whose half meets the diagram a multiple of `m`
/// times: these are exactly the crossings that lift to self-crossings.
fn lifted_subword(code: &GaussCode, m: u32) -> GaussCode {
    let hs = halves(&build_carter(code));
    let keep = |l: &str| hs.iter().find(|h| h.label == l).unwrap().n.rem_euclid(i64::from(m)) == 0;
    GaussCode::from_tokens(code.tokens().into_iter().filter(|(l, _, _)| keep(l))).unwrap()
}

fn signs(rng: &mut ChaCha8Rng, n: usize) -> Vec<Sign> {
    (0..n).map(|_| if rng.gen() { Sign::Plus } else { Sign::Minus }).collect()
}

#[test]
fn two_crossing_knot_covers_are_trivial() {
    for m in 2..6 {
        let c = self_cover(&build_carter(&torus_two_crossing()), m);
        assert_eq!(c.crossing_count(), 0);
    }
}

#[test]
fn alpha_cover_is_itself_when_m_divides_p_and_q() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (p, q, m) in [(2, 2, 2), (2, 4, 2), (3, 3, 3), (4, 2, 2)] {
        let s = signs(&mut rng, p + q);
        let d = build_carter(&alpha_pq(p, q, &s).unwrap());
        let h = higher_invariants(&d, &[m], DEFAULT_MAX_CROSSINGS).unwrap();
        assert_eq!(h.diagram.crossing_count(), p + q);
        assert_eq!(h.diagram.genus(), d.genus());
        let t = reduce_primitive(&graded_matrix_of(&d)).unwrap().0;
        assert!(is_isomorphic(&h.primitive, &t), "({p},{q},{m})");
    }
}

#[test]
fn alpha_cover_with_m_dividing_p_only_is_trivial() {
    // only the vertical crossings lift and they are pairwise unlinked
    for (p, q, m) in [(2, 3, 2), (4, 3, 2), (3, 2, 3), (2, 1, 2)] {
        let d = build_carter(&alpha_pq(p, q, &vec![Sign::Plus; p + q]).unwrap());
        let h = higher_invariants(&d, &[m], DEFAULT_MAX_CROSSINGS).unwrap();
        assert_eq!(h.diagram.crossing_count(), q);
        assert!(h.u_plus.is_zero() && h.u_minus.is_zero());
        assert!(h.primitive.is_trivial(), "({p},{q},{m})");
    }
}

#[test]
fn cover_agrees_with_lifted_subword() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..60 {
        let n = rng.gen_range(0..=6);
        let code = random_code(&mut rng, n);
        for m in [2, 3] {
            let sub = lifted_subword(&code, m);
            let h = higher_invariants(&build_carter(&code), &[m], DEFAULT_MAX_CROSSINGS).unwrap();
            assert_eq!(h.diagram.crossing_count(), sub.crossing_count(), "{code} m = {m}");
            let want = reduce_primitive(&graded_matrix_of(&build_carter(&sub))).unwrap().0;
            assert!(is_isomorphic(&h.primitive, &want), "{code} m = {m}");
        }
    }
}

#[test]
fn iterated_covers_respect_the_cap() {
    let d = build_carter(&alpha_pq(2, 2, &[Sign::Plus; 4]).unwrap());
    assert!(higher_invariants(&d, &[2, 2, 2], DEFAULT_MAX_CROSSINGS).is_ok());
    assert!(higher_invariants(&d, &[2], 3).is_err());
}
