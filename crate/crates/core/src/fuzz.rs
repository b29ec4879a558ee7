//! Random Reidemeister-move fuzzing of the knot invariants.
//!
//! Case `i` of a run with seed `s` draws from a generator seeded with
//! `s + i`, so a failing case replays as case 0 of a run with that seed.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::diagram::{apply_rmove, enumerate_rmoves, random_code, realizable_pair_check, GaussCode, RMoveKind};
use crate::fatgraph::build_carter;
use crate::graded::{is_isomorphic, reduce_primitive, GradedMatrix};
use crate::invariants::{graded_matrix_of, u_polynomials, LaurentFreePolynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FuzzConfig {
    pub seed: u64,
    pub cases: usize,
    pub max_crossings: usize,
    pub max_moves: usize,
}

impl Default for FuzzConfig {
    fn default() -> FuzzConfig {
        FuzzConfig { seed: 0, cases: 500, max_crossings: 6, max_moves: 8 }
    }
}

/// A property that failed, with what is needed to replay it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub case: usize,
    pub case_seed: u64,
    pub start: String,
    pub moves: Vec<String>,
    pub code: String,
    pub property: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct FuzzSummary {
    pub cases: usize,
    pub moves: usize,
    pub violations: Vec<Violation>,
}

/// The move-invariant data of a code.
#[derive(Clone, Debug)]
pub struct Snapshot {
    pub u_plus: LaurentFreePolynomial,
    pub u_minus: LaurentFreePolynomial,
    pub primitive: GradedMatrix,
}

impl Snapshot {
    pub fn of(code: &GaussCode) -> Snapshot {
        let d = build_carter(code);
        let (u_plus, u_minus) = u_polynomials(&d);
        let (primitive, _) = reduce_primitive(&graded_matrix_of(&d)).expect("T(D) is skew");
        Snapshot { u_plus, u_minus, primitive }
    }

    pub fn u(&self) -> LaurentFreePolynomial {
        &self.u_plus - &self.u_minus
    }

    /// The first invariant that differs from `other`, if any.
    pub fn differs(&self, other: &Snapshot) -> Option<&'static str> {
        if self.u_plus != other.u_plus {
            Some("u+ changed")
        } else if self.u_minus != other.u_minus {
            Some("u- changed")
        } else if !is_isomorphic(&self.primitive, &other.primitive) {
            Some("T_bullet changed")
        } else {
            None
        }
    }
}

/// Checks that hold for a single diagram: the realizability conditions on
/// `u+-`, and independence of `u` from the over/under data.
pub fn single_code_checks(code: &GaussCode, snap: &Snapshot) -> Option<String> {
    if !realizable_pair_check(&snap.u_plus, &snap.u_minus) {
        return Some(format!("u'+(1) != u'-(1) for u+ = {}, u- = {}", snap.u_plus, snap.u_minus));
    }
    let u = snap.u();
    for c in 0..code.crossing_count() {
        let (p, m) = u_polynomials(&build_carter(&code.crossing_change(c)));
        if &p - &m != u {
            return Some(format!("u changed under a crossing change at {}", code.label(c)));
        }
    }
    None
}

fn run_case(config: &FuzzConfig, case: usize) -> (usize, Option<Violation>) {
    let case_seed = config.seed.wrapping_add(case as u64);
    let mut rng = ChaCha8Rng::seed_from_u64(case_seed);
    let n = rng.gen_range(0..=config.max_crossings);
    let start = random_code(&mut rng, n);
    let base = Snapshot::of(&start);
    let mut code = start.clone();
    let mut applied = Vec::new();
    let violation = |code: &GaussCode, applied: &[String], property: String| Violation {
        case,
        case_seed,
        start: start.to_string(),
        moves: applied.to_vec(),
        code: code.to_string(),
        property,
    };
    if let Some(p) = single_code_checks(&start, &base) {
        return (0, Some(violation(&start, &applied, p)));
    }
    for _ in 0..rng.gen_range(0..=config.max_moves) {
        let moves = enumerate_rmoves(&code);
        // pick the kind first: creating moves vastly outnumber the others
        let mut kinds: Vec<RMoveKind> = moves.iter().map(|m| m.kind()).collect();
        kinds.sort_by_key(|k| *k as u8);
        kinds.dedup();
        let kind = *kinds.choose(&mut rng).expect("creating moves always apply");
        let of_kind: Vec<_> = moves.iter().filter(|m| m.kind() == kind).collect();
        let mv = *of_kind.choose(&mut rng).expect("nonempty");
        applied.push(mv.to_string());
        code = match apply_rmove(&code, mv) {
            Ok(c) => c,
            Err(e) => return (applied.len(), Some(violation(&code, &applied, format!("enumerated move failed: {e}")))),
        };
        let snap = Snapshot::of(&code);
        if let Some(p) = base.differs(&snap) {
            return (applied.len(), Some(violation(&code, &applied, p.to_string())));
        }
        if let Some(p) = single_code_checks(&code, &snap) {
            return (applied.len(), Some(violation(&code, &applied, p)));
        }
    }
    (applied.len(), None)
}

/// Runs `config.cases` cases: a random code, then up to `max_moves` random
/// moves, checking the invariants after every move.
pub fn run(config: &FuzzConfig) -> FuzzSummary {
    let mut summary = FuzzSummary { cases: config.cases, ..FuzzSummary::default() };
    for case in 0..config.cases {
        let (moves, v) = run_case(config, case);
        summary.moves += moves;
        summary.violations.extend(v);
    }
    summary
}
