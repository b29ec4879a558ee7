use knotcob::diagram::{random_code, GaussCode};
use knotcob::fatgraph::build_carter;
use knotcob::graded::{is_isomorphic, reduce_primitive, GradedMatrix};
use knotcob::invariants::{graded_matrix_of, u_polynomials};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn code(seed: u64, n: usize) -> GaussCode {
    random_code(&mut ChaCha8Rng::seed_from_u64(seed), n)
}

fn primitive(c: &GaussCode) -> GradedMatrix {
    reduce_primitive(&graded_matrix_of(&build_carter(c))).unwrap().0
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn display_parse_round_trip(seed in any::<u64>(), n in 0usize..8) {
        let c = code(seed, n);
        let back: GaussCode = c.to_string().parse().unwrap();
        prop_assert_eq!(back, c);
    }

    #[test]
    fn invariants_do_not_depend_on_the_base_point(seed in any::<u64>(), n in 1usize..7, k in 0usize..14) {
        let c = code(seed, n);
        let r = c.rotate(k % c.len());
        prop_assert!(c.equivalent_up_to_rotation(&r));
        let d = build_carter(&c);
        let dr = build_carter(&r);
        prop_assert_eq!(d.genus(), dr.genus());
        prop_assert_eq!(u_polynomials(&d), u_polynomials(&dr));
        prop_assert!(is_isomorphic(&primitive(&c), &primitive(&r)));
    }

    #[test]
    fn reverse_and_mirror_are_commuting_involutions(seed in any::<u64>(), n in 0usize..8) {
        let c = code(seed, n);
        prop_assert_eq!(c.reverse().reverse(), c.clone());
        prop_assert_eq!(c.mirror().mirror(), c.clone());
        prop_assert_eq!(c.reverse().mirror(), c.mirror().reverse());
        prop_assert_eq!(build_carter(&c.mirror()).genus(), build_carter(&c).genus());
    }

    #[test]
    fn u_is_realizable(seed in any::<u64>(), n in 0usize..8) {
        let (up, um) = u_polynomials(&build_carter(&code(seed, n)));
        prop_assert_eq!(up.derivative_at_one(), um.derivative_at_one());
    }

    #[test]
    fn connected_sum_adds(s1 in any::<u64>(), n1 in 0usize..5, s2 in any::<u64>(), n2 in 0usize..5) {
        let (a, b) = (code(s1, n1), code(s2, n2));
        let sum = a.connected_sum(&b);
        prop_assert_eq!(sum.crossing_count(), n1 + n2);
        let (da, db, ds) = (build_carter(&a), build_carter(&b), build_carter(&sum));
        // equality fails when the cut point sees one boundary component of N on both sides
        prop_assert!(ds.genus() <= da.genus() + db.genus());
        let (ap, am) = u_polynomials(&da);
        let (bp, bm) = u_polynomials(&db);
        prop_assert_eq!(u_polynomials(&ds), (&ap + &bp, &am + &bm));
    }
}

#[test]
fn malformed_codes_are_rejected() {
    for bad in ["O1+ O1+", "O1+", "O1+ U1-", "X1+ U1+", "O1 U1"] {
        assert!(bad.parse::<GaussCode>().is_err(), "{bad}");
    }
}
