//! Cobordism of graded matrices: an inflated matrix is cobordant to the
//! original, the two-crossing matrix is not null-cobordant.

use knotcob::graded::{inflate, is_cobordant, two_crossing_matrix, GradedMatrix};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let t = two_crossing_matrix();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let (big, _) = inflate(&mut rng, &t, 2, 2);
    println!("{}", is_cobordant(&t, &big, 1).unwrap());
    println!("{}", is_cobordant(&t, &GradedMatrix::trivial(), 1).unwrap());
}
