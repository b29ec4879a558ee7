use knotcob::graded::{
    genus, inflate, is_cobordant, is_isomorphic, is_primitive, p_genus, random_skew, reduce_primitive,
    reduce_primitive_random, CobordismVerdict, GradedMatrix,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn matrix(seed: u64, n: usize) -> GradedMatrix {
    random_skew(&mut ChaCha8Rng::seed_from_u64(seed), n, 2)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn reduction_is_confluent(seed in any::<u64>(), n in 0usize..7, order in any::<u64>()) {
        let t = matrix(seed, n);
        let (a, _) = reduce_primitive(&t).unwrap();
        let (b, _) = reduce_primitive_random(&t, &mut ChaCha8Rng::seed_from_u64(order)).unwrap();
        prop_assert!(is_primitive(&a));
        prop_assert!(is_isomorphic(&a, &b));
    }

    #[test]
    fn inflation_reduces_back(seed in any::<u64>(), n in 0usize..5, k in 0usize..4) {
        let t = reduce_primitive(&matrix(seed, n)).unwrap().0;
        let (big, _) = inflate(&mut ChaCha8Rng::seed_from_u64(seed ^ 1), &t, k, 2);
        prop_assert!(is_isomorphic(&reduce_primitive(&big).unwrap().0, &t));
        prop_assert_eq!(genus(&big).unwrap(), genus(&t).unwrap());
    }

    #[test]
    fn genus_bounds(seed in any::<u64>(), n in 0usize..7) {
        let t = matrix(seed, n);
        let sigma = genus(&t).unwrap();
        prop_assert_eq!(genus(&t.neg()).unwrap(), sigma);
        prop_assert_eq!(genus(&t.bar()).unwrap(), sigma);
        for p in [2, 3, 5] {
            prop_assert!(p_genus(&t, p).unwrap() <= sigma);
        }
    }

    #[test]
    fn transforms_are_involutions(seed in any::<u64>(), n in 0usize..7) {
        let t = matrix(seed, n);
        prop_assert!(is_isomorphic(&t.neg().neg(), &t));
        prop_assert!(is_isomorphic(&t.bar().bar(), &t));
        prop_assert!(is_isomorphic(&t.neg().bar(), &t.bar().neg()));
    }

    #[test]
    fn json_round_trip(seed in any::<u64>(), n in 0usize..7) {
        let t = matrix(seed, n);
        let back = GradedMatrix::from_json(&t.to_json().to_string()).unwrap();
        prop_assert!(is_isomorphic(&back, &t));
    }

    #[test]
    fn inflated_matrices_are_cobordant(seed in any::<u64>(), n in 0usize..4) {
        let t = matrix(seed, n);
        let (big, _) = inflate(&mut ChaCha8Rng::seed_from_u64(seed ^ 2), &t, 2, 2);
        let v = is_cobordant(&t, &big, 1).unwrap();
        prop_assert!(matches!(v, CobordismVerdict::Cobordant { .. }), "{}", v);
    }
}
