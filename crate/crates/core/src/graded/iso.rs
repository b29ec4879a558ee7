//! Isomorphism of graded matrices by colour refinement and backtracking.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use super::GradedMatrix;

pub fn is_isomorphic(t1: &GradedMatrix, t2: &GradedMatrix) -> bool {
    isomorphism(t1, t2).is_some()
}

/// A bijection `f` with `f[0] = 0` carrying signs and pairing of `t1` to
/// those of `t2`, if one exists.
pub fn isomorphism(t1: &GradedMatrix, t2: &GradedMatrix) -> Option<Vec<usize>> {
    if t1.ring() != t2.ring() || t1.size() != t2.size() {
        return None;
    }
    let n = t1.size();
    let (c1, c2) = refine(t1, t2);
    let mut sorted1 = c1.clone();
    let mut sorted2 = c2.clone();
    sorted1.sort_unstable();
    sorted2.sort_unstable();
    if sorted1 != sorted2 {
        return None;
    }
    // assign elements of t1 in order of increasing colour-class size
    let class_size = |c: u64| c1.iter().filter(|&&x| x == c).count();
    let mut order: Vec<usize> = (1..n).collect();
    order.sort_by_key(|&g| (class_size(c1[g]), g));
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    map[0] = 0;
    used[0] = true;
    if t1.b(0, 0) != t2.b(0, 0) {
        return None;
    }
    if extend(t1, t2, &c1, &c2, &order, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn extend(
    t1: &GradedMatrix,
    t2: &GradedMatrix,
    c1: &[u64],
    c2: &[u64],
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&g) = order.get(depth) else { return true };
    for h in 1..t2.size() {
        if used[h] || c1[g] != c2[h] || t1.sign(g) != t2.sign(h) || t1.b(g, g) != t2.b(h, h) {
            continue;
        }
        let consistent = (0..t1.size())
            .filter(|&k| map[k] != usize::MAX)
            .all(|k| t1.b(g, k) == t2.b(h, map[k]) && t1.b(k, g) == t2.b(map[k], h));
        if !consistent {
            continue;
        }
        map[g] = h;
        used[h] = true;
        if extend(t1, t2, c1, c2, order, depth + 1, map, used) {
            return true;
        }
        map[g] = usize::MAX;
        used[h] = false;
    }
    false
}

fn hash_of<T: Hash>(x: &T) -> u64 {
    let mut s = DefaultHasher::new();
    x.hash(&mut s);
    s.finish()
}

/// Stable colours computed jointly, so equal colours are comparable across
/// the two matrices.
fn refine(t1: &GradedMatrix, t2: &GradedMatrix) -> (Vec<u64>, Vec<u64>) {
    let initial = |t: &GradedMatrix| -> Vec<u64> {
        (0..t.size())
            .map(|g| {
                let sign = if g == 0 { 0 } else { t.sign(g).value() };
                hash_of(&(g == 0, sign, t.b(g, g), t.b(g, 0), t.b(0, g)))
            })
            .collect()
    };
    let step = |t: &GradedMatrix, c: &[u64]| -> Vec<u64> {
        (0..t.size())
            .map(|g| {
                let mut nbr: Vec<(u64, i64, i64)> = (0..t.size()).map(|h| (c[h], t.b(g, h), t.b(h, g))).collect();
                nbr.sort_unstable();
                hash_of(&(c[g], nbr))
            })
            .collect()
    };
    let classes = |a: &[u64], b: &[u64]| {
        let mut all: Vec<u64> = a.iter().chain(b).copied().collect();
        all.sort_unstable();
        all.dedup();
        all.len()
    };
    let (mut a, mut b) = (initial(t1), initial(t2));
    let mut count = classes(&a, &b);
    loop {
        let (na, nb) = (step(t1, &a), step(t2, &b));
        let nc = classes(&na, &nb);
        a = na;
        b = nb;
        if nc == count {
            return (a, b);
        }
        count = nc;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::{random_skew, two_crossing_matrix};
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn relabelled_copy_is_isomorphic() {
        let t = two_crossing_matrix();
        let swapped = t.restrict(&[0, 2, 1]).with_names(["a".to_string(), "b".to_string()]);
        let f = isomorphism(&t, &swapped).unwrap();
        assert_eq!(f, [0, 2, 1]);
    }

    #[test]
    fn negation_and_trivial_differ() {
        let t = two_crossing_matrix();
        assert!(!is_isomorphic(&t, &t.neg()));
        assert!(!is_isomorphic(&t, &GradedMatrix::trivial()));
        assert!(is_isomorphic(&GradedMatrix::trivial(), &GradedMatrix::trivial()));
    }

    #[test]
    fn random_permutations() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let t = random_skew(&mut rng, 7, 2);
            let mut perm: Vec<usize> = (1..t.size()).collect();
            perm.shuffle(&mut rng);
            perm.insert(0, 0);
            let u = t.restrict(&perm);
            let f = isomorphism(&t, &u).expect("permuted copy");
            for i in 0..t.size() {
                for j in 0..t.size() {
                    assert_eq!(t.b(i, j), u.b(f[i], f[j]));
                }
            }
        }
    }
}
