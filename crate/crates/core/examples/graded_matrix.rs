//! Building a graded matrix by hand, reducing it and computing its genera.

use knotcob::graded::{genus, inflate, p_genus, random_skew, reduce_primitive, two_crossing_matrix};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let t = two_crossing_matrix();
    println!("{t}");
    println!("sigma = {}, sigma_2 = {}", genus(&t).unwrap(), p_genus(&t, 2).unwrap());
    println!("{}", serde_json::to_string_pretty(&t.to_json()).unwrap());

    // inflate a random primitive-ish matrix and reduce it back
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let small = random_skew(&mut rng, 3, 2);
    let (big, moves) = inflate(&mut rng, &small, 3, 2);
    let (back, deleted) = reduce_primitive(&big).unwrap();
    println!(
        "size {} -> {} after {} moves -> {} after deleting {}",
        small.size(),
        big.size(),
        moves.len(),
        back.size(),
        deleted.len()
    );
}
