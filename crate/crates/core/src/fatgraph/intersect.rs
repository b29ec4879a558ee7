//! Algebraic intersection numbers of closed edge paths.
//!
//! Every edge is thickened to a band and every vertex to a disk. Each pass of
//! a path along an edge gets its own lane in the band, so the two paths become
//! disjoint parallel strands except inside the vertex disks, where every visit
//! is a straight chord between two boundary points. Chords of the two paths
//! cross exactly when their endpoints interleave around the disk.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{EdgePath, Fatgraph, FatgraphError};

/// Homological intersection number `a . b` on the capped surface of `fg`.
pub fn intersect(fg: &Fatgraph, a: &EdgePath, b: &EdgePath) -> Result<i64, FatgraphError> {
    intersect_impl(fg, a, b, None)
}

/// Same as [`intersect`] but with lanes assigned in a random order; the
/// result does not depend on the seed.
pub fn intersect_with_lane_seed(fg: &Fatgraph, a: &EdgePath, b: &EdgePath, seed: u64) -> Result<i64, FatgraphError> {
    intersect_impl(fg, a, b, Some(seed))
}

/// Boundary point of a vertex disk: (rotation slot, position across the band end).
type Point = (usize, usize);

struct Chord {
    start: Point,
    end: Point,
}

fn intersect_impl(fg: &Fatgraph, a: &EdgePath, b: &EdgePath, seed: Option<u64>) -> Result<i64, FatgraphError> {
    for p in [a, b] {
        if !p.is_empty() && !fg.is_closed_path(p) {
            return Err(FatgraphError::PathNotOnGraph);
        }
    }
    if a.is_empty() || b.is_empty() {
        return Ok(0);
    }

    // strands[e] = (path, index) of every pass along edge e, in lane order
    let mut strands: Vec<Vec<(usize, usize)>> = vec![Vec::new(); fg.edge_count()];
    for (pi, path) in [a, b].into_iter().enumerate() {
        for (k, d) in path.edges().iter().enumerate() {
            strands[d.edge].push((pi, k));
        }
    }
    if let Some(seed) = seed {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for s in &mut strands {
            s.shuffle(&mut rng);
        }
    }
    let mut lane = [vec![0usize; a.len()], vec![0usize; b.len()]];
    for s in &strands {
        for (l, &(pi, k)) in s.iter().enumerate() {
            lane[pi][k] = l;
        }
    }

    // the two ends of a band see its lanes in opposite orders
    let point = |half: usize, l: usize| -> Point {
        let width = strands[half / 2].len();
        let pos = if half.is_multiple_of(2) { l } else { width - 1 - l };
        (fg.slot_of(half), pos)
    };

    let mut chords: [Vec<Vec<Chord>>; 2] =
        [(0..fg.vertex_count()).map(|_| Vec::new()).collect(), (0..fg.vertex_count()).map(|_| Vec::new()).collect()];
    for (pi, path) in [a, b].into_iter().enumerate() {
        let e = path.edges();
        for k in 0..e.len() {
            let prev = (k + e.len() - 1) % e.len();
            let in_half = e[prev].in_half();
            let out_half = e[k].out_half();
            let v = fg.vertex_of(out_half);
            chords[pi][v].push(Chord { start: point(in_half, lane[pi][prev]), end: point(out_half, lane[pi][k]) });
        }
    }

    let mut total = 0i64;
    for v in 0..fg.vertex_count() {
        for ca in &chords[0][v] {
            for cb in &chords[1][v] {
                total += chord_sign(ca, cb);
            }
        }
    }
    Ok(total)
}

/// Whether `y` lies strictly inside the counterclockwise arc from `x` to `z`.
fn between(x: Point, y: Point, z: Point) -> bool {
    if x < z {
        x < y && y < z
    } else {
        y > x || y < z
    }
}

fn chord_sign(a: &Chord, b: &Chord) -> i64 {
    let bs = between(a.start, b.start, a.end);
    let be = between(a.start, b.end, a.end);
    match (bs, be) {
        (true, false) => 1,
        (false, true) => -1,
        _ => 0,
    }
}
