//! Random Reidemeister moves never change u+- or T_bullet.

use knotcob::fuzz::{run, FuzzConfig};

fn main() {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(0);
    let summary = run(&FuzzConfig { seed, cases: 100, ..FuzzConfig::default() });
    println!("{} cases, {} moves, {} violations", summary.cases, summary.moves, summary.violations.len());
    for v in &summary.violations {
        println!("{v:?}");
    }
}
