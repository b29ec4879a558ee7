//! Reidemeister moves on Gauss codes.

use std::fmt;

use crate::Sign;

use super::{DiagramError, Flag, GaussCode};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RMoveKind {
    R1Plus,
    R1Minus,
    R2Plus,
    R2Minus,
    R3,
}

/// A Reidemeister move on a specific code.
///
/// Gaps index insertion points: gap `g` inserts before token `g`. A code of
/// length `2n > 0` has `2n` gaps, the empty code has one.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RMove {
    /// Insert a curl `x x` at `gap`; the first pass has flag `first`.
    R1Plus { gap: usize, first: Flag, writhe: Sign },
    /// Remove a curl: the two passes of `label` are cyclically adjacent.
    R1Minus { label: String },
    /// Insert a bigon. Strand `a` (at `gaps.0`) passes `x` then `y`, strand `b`
    /// (at `gaps.1 >= gaps.0`) passes `x, y` or, if `reversed`, `y, x`.
    /// Strand `a` is over iff `a_over`; `x` gets `writhe` and `y` its negative.
    R2Plus { gaps: (usize, usize), a_over: bool, reversed: bool, writhe: Sign },
    /// Remove a bigon formed by two crossings of opposite writhe whose over
    /// passes are adjacent and whose under passes are adjacent.
    R2Minus { labels: (String, String) },
    /// Triangle move: three disjoint adjacent pairs starting at `starts`,
    /// each pair is swapped.
    R3 { starts: [usize; 3] },
}

impl RMove {
    pub fn kind(&self) -> RMoveKind {
        match self {
            RMove::R1Plus { .. } => RMoveKind::R1Plus,
            RMove::R1Minus { .. } => RMoveKind::R1Minus,
            RMove::R2Plus { .. } => RMoveKind::R2Plus,
            RMove::R2Minus { .. } => RMoveKind::R2Minus,
            RMove::R3 { .. } => RMoveKind::R3,
        }
    }
}

impl fmt::Display for RMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RMove::R1Plus { gap, first, writhe } => write!(f, "R1+@{gap}:{first:?}{writhe}"),
            RMove::R1Minus { label } => write!(f, "R1-:{label}"),
            RMove::R2Plus { gaps, a_over, reversed, writhe } => {
                write!(
                    f,
                    "R2+@{},{}:{}{}{}",
                    gaps.0,
                    gaps.1,
                    if *a_over { "O" } else { "U" },
                    if *reversed { "r" } else { "s" },
                    writhe
                )
            }
            RMove::R2Minus { labels } => write!(f, "R2-:{},{}", labels.0, labels.1),
            RMove::R3 { starts } => write!(f, "R3@{},{},{}", starts[0], starts[1], starts[2]),
        }
    }
}

fn gap_count(code: &GaussCode) -> usize {
    code.len().max(1)
}

fn cyclically_adjacent(a: usize, b: usize, len: usize) -> bool {
    let (lo, hi) = (a.min(b), a.max(b));
    hi == lo + 1 || (lo == 0 && hi + 1 == len && len > 2)
}

fn r1_removable(code: &GaussCode, c: usize) -> bool {
    let (a, b) = code.positions(c);
    cyclically_adjacent(a, b, code.len())
}

fn passage_position(code: &GaussCode, c: usize, flag: Flag) -> usize {
    let (a, b) = code.positions(c);
    if code.word()[a].flag == flag {
        a
    } else {
        b
    }
}

fn r2_removable(code: &GaussCode, x: usize, y: usize) -> bool {
    if x == y || code.writhe(x) == code.writhe(y) {
        return false;
    }
    let len = code.len();
    let adj = |a: usize, b: usize| cyclically_adjacent(a, b, len);
    adj(passage_position(code, x, Flag::Over), passage_position(code, y, Flag::Over))
        && adj(passage_position(code, x, Flag::Under), passage_position(code, y, Flag::Under))
}

/// Local data of one strand through the triangle: the two crossings it meets in
/// order (as crossing indices) with the strand's flag at each.
type StrandPair = [(usize, Flag); 2];

/// Checks a triangle against the planar model of three straight lines.
///
/// Line `k` has base direction at angle `60k` degrees; for offset `+1` the
/// crossings along the lines occur in orders `[1,2]`, `[0,2]`, `[0,1]` and
/// moving the third line across the opposite vertex reverses all three orders.
/// Directions, offset, and stacking order are free parameters.
fn triangle_matches_model(pairs: &[StrandPair; 3], writhe: &dyn Fn(usize) -> Sign) -> bool {
    const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    const BASE_ORDER: [[usize; 2]; 3] = [[1, 2], [0, 2], [0, 1]];
    let shared = |a: usize, b: usize| -> Option<usize> {
        pairs[a].iter().map(|t| t.0).find(|c| pairs[b].iter().any(|u| u.0 == *c))
    };
    for line_of_pair in PERMS {
        let mut pair_of_line = [0usize; 3];
        for (p, &l) in line_of_pair.iter().enumerate() {
            pair_of_line[l] = p;
        }
        let mut label = [[usize::MAX; 3]; 3];
        let mut ok = true;
        for i in 0..3 {
            for j in 0..3 {
                if i != j {
                    match shared(pair_of_line[i], pair_of_line[j]) {
                        Some(c) => label[i][j] = c,
                        None => ok = false,
                    }
                }
            }
        }
        if !ok {
            continue;
        }
        for height in PERMS {
            for dirs in 0..8u8 {
                let dir = |k: usize| if dirs >> k & 1 == 1 { -1i64 } else { 1 };
                // writhe is independent of the offset
                let mut signs_ok = true;
                for i in 0..3 {
                    for j in i + 1..3 {
                        let over_is_i = height[i] > height[j];
                        let s = dir(i) * dir(j) * if over_is_i { 1 } else { -1 };
                        if writhe(label[i][j]).value() != s {
                            signs_ok = false;
                        }
                    }
                }
                if !signs_ok {
                    continue;
                }
                for eps in [1i64, -1] {
                    let fits = (0..3).all(|k| {
                        let mut order = BASE_ORDER[k];
                        if eps * dir(k) < 0 {
                            order.swap(0, 1);
                        }
                        let pair = &pairs[pair_of_line[k]];
                        (0..2).all(|t| {
                            let other = order[t];
                            let flag = if height[k] > height[other] { Flag::Over } else { Flag::Under };
                            pair[t] == (label[k][other], flag)
                        })
                    });
                    if fits {
                        return true;
                    }
                }
            }
        }
    }
    false
}

fn r3_applicable(code: &GaussCode, starts: [usize; 3]) -> bool {
    let len = code.len();
    if len < 6 {
        return false;
    }
    let mut used = vec![false; len];
    for &s in &starts {
        if s >= len {
            return false;
        }
        for p in [s, (s + 1) % len] {
            if used[p] {
                return false;
            }
            used[p] = true;
        }
    }
    let w = code.word();
    let pairs: [StrandPair; 3] = starts.map(|s| {
        let a = w[s];
        let b = w[(s + 1) % len];
        [(a.crossing, a.flag), (b.crossing, b.flag)]
    });
    // triangle shape: three distinct crossings, each in exactly two pairs
    let mut count = std::collections::HashMap::new();
    for p in &pairs {
        if p[0].0 == p[1].0 {
            return false;
        }
        for t in p {
            *count.entry(t.0).or_insert(0) += 1;
        }
    }
    if count.len() != 3 || count.values().any(|&c| c != 2) {
        return false;
    }
    triangle_matches_model(&pairs, &|c| code.writhe(c))
}

/// All removing moves and R3 moves that apply to `code`, plus the canonical
/// family of creating moves (R1+ and R2+ at every gap and gap pair).
pub fn enumerate_rmoves(code: &GaussCode) -> Vec<RMove> {
    let mut moves = Vec::new();
    let n = code.crossing_count();
    for c in 0..n {
        if r1_removable(code, c) {
            moves.push(RMove::R1Minus { label: code.label(c).to_string() });
        }
    }
    for x in 0..n {
        for y in x + 1..n {
            if r2_removable(code, x, y) {
                moves.push(RMove::R2Minus { labels: (code.label(x).to_string(), code.label(y).to_string()) });
            }
        }
    }
    let len = code.len();
    if len >= 6 {
        for i in 0..len {
            for j in i + 1..len {
                for k in j + 1..len {
                    if r3_applicable(code, [i, j, k]) {
                        moves.push(RMove::R3 { starts: [i, j, k] });
                    }
                }
            }
        }
    }
    let gaps = gap_count(code);
    for gap in 0..gaps {
        for first in [Flag::Over, Flag::Under] {
            for writhe in [Sign::Plus, Sign::Minus] {
                moves.push(RMove::R1Plus { gap, first, writhe });
            }
        }
    }
    for ga in 0..gaps {
        for gb in ga..gaps {
            for a_over in [true, false] {
                for reversed in [false, true] {
                    for writhe in [Sign::Plus, Sign::Minus] {
                        moves.push(RMove::R2Plus { gaps: (ga, gb), a_over, reversed, writhe });
                    }
                }
            }
        }
    }
    moves
}

fn inapplicable(m: &RMove, why: &str) -> DiagramError {
    DiagramError::InapplicableMove(format!("{m}: {why}"))
}

pub fn apply_rmove(code: &GaussCode, m: &RMove) -> Result<GaussCode, DiagramError> {
    let mut tokens = code.tokens();
    match m {
        RMove::R1Plus { gap, first, writhe } => {
            if *gap >= gap_count(code) {
                return Err(inapplicable(m, "gap out of range"));
            }
            let x = code.fresh_label();
            tokens.insert(*gap, (x.clone(), first.toggled(), *writhe));
            tokens.insert(*gap, (x, *first, *writhe));
        }
        RMove::R1Minus { label } => {
            let c = code.crossing_by_label(label).ok_or_else(|| inapplicable(m, "unknown label"))?;
            if !r1_removable(code, c) {
                return Err(inapplicable(m, "passes are not adjacent"));
            }
            tokens.retain(|t| &t.0 != label);
        }
        RMove::R2Plus { gaps, a_over, reversed, writhe } => {
            let (ga, gb) = *gaps;
            if ga > gb || gb >= gap_count(code) {
                return Err(inapplicable(m, "gap out of range"));
            }
            let x = code.fresh_label();
            let y = {
                let mut k: usize = x.parse().unwrap_or(code.crossing_count()) + 1;
                loop {
                    let cand = k.to_string();
                    if code.crossing_by_label(&cand).is_none() && cand != x {
                        break cand;
                    }
                    k += 1;
                }
            };
            let fa = if *a_over { Flag::Over } else { Flag::Under };
            let fb = fa.toggled();
            let a = [(x.clone(), fa, *writhe), (y.clone(), fa, -*writhe)];
            let b = if *reversed {
                [(y.clone(), fb, -*writhe), (x.clone(), fb, *writhe)]
            } else {
                [(x.clone(), fb, *writhe), (y.clone(), fb, -*writhe)]
            };
            if ga == gb {
                for t in a.into_iter().chain(b).rev() {
                    tokens.insert(ga, t);
                }
            } else {
                for t in b.into_iter().rev() {
                    tokens.insert(gb, t);
                }
                for t in a.into_iter().rev() {
                    tokens.insert(ga, t);
                }
            }
        }
        RMove::R2Minus { labels } => {
            let x = code.crossing_by_label(&labels.0).ok_or_else(|| inapplicable(m, "unknown label"))?;
            let y = code.crossing_by_label(&labels.1).ok_or_else(|| inapplicable(m, "unknown label"))?;
            if !r2_removable(code, x, y) {
                return Err(inapplicable(m, "not a bigon"));
            }
            tokens.retain(|t| t.0 != labels.0 && t.0 != labels.1);
        }
        RMove::R3 { starts } => {
            if !r3_applicable(code, *starts) {
                return Err(inapplicable(m, "not a valid triangle"));
            }
            let len = tokens.len();
            for &s in starts {
                tokens.swap(s, (s + 1) % len);
            }
        }
    }
    GaussCode::from_tokens(tokens)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn code(s: &str) -> GaussCode {
        GaussCode::parse(s).unwrap()
    }

    #[test]
    fn curl_is_removable() {
        let c = code("O1+ U1+");
        let moves = enumerate_rmoves(&c);
        assert!(moves.contains(&RMove::R1Minus { label: "1".into() }));
        let r = apply_rmove(&c, &RMove::R1Minus { label: "1".into() }).unwrap();
        assert!(r.is_empty());
    }

    #[test]
    fn two_crossing_torus_code_has_no_removing_moves() {
        let moves = enumerate_rmoves(&code("O1+ O2+ U1+ U2+"));
        assert!(moves.iter().all(|m| !matches!(m.kind(), RMoveKind::R1Minus | RMoveKind::R2Minus)));
    }

    #[test]
    fn empty_code_only_creating_moves() {
        let moves = enumerate_rmoves(&GaussCode::empty());
        assert!(!moves.is_empty());
        assert!(moves.iter().all(|m| matches!(m.kind(), RMoveKind::R1Plus | RMoveKind::R2Plus)));
    }

    #[test]
    fn creating_moves_round_trip() {
        let base = code("O1+ U2- O3+ U1+ O2- U3+");
        for m in enumerate_rmoves(&base) {
            let grown = match m.kind() {
                RMoveKind::R1Plus | RMoveKind::R2Plus => apply_rmove(&base, &m).unwrap(),
                _ => continue,
            };
            let new_labels: Vec<String> =
                grown.labels().iter().filter(|l| base.crossing_by_label(l).is_none()).cloned().collect();
            let undo = if new_labels.len() == 1 {
                RMove::R1Minus { label: new_labels[0].clone() }
            } else {
                RMove::R2Minus { labels: (new_labels[0].clone(), new_labels[1].clone()) }
            };
            assert!(enumerate_rmoves(&grown).contains(&undo), "{m} on {base} gives {grown}");
            let back = apply_rmove(&grown, &undo).unwrap();
            assert!(back.equivalent_up_to_rotation(&base));
        }
    }

    #[test]
    fn classical_r3_is_found_and_involutive() {
        // three strands of the standard braid-like triangle: a over b over c
        // strand a meets (ab, ac), strand b meets (ab, bc), strand c meets (ac, bc)
        let c = code("O1+ O2+ U1+ O3+ U2+ U3+");
        let r3: Vec<RMove> = enumerate_rmoves(&c).into_iter().filter(|m| m.kind() == RMoveKind::R3).collect();
        assert!(!r3.is_empty());
        for m in r3 {
            let moved = apply_rmove(&c, &m).unwrap();
            let back = apply_rmove(&moved, &m).unwrap();
            assert_eq!(back, c);
        }
    }

    #[test]
    fn inapplicable_moves_error() {
        let c = code("O1+ O2+ U1+ U2+");
        assert!(apply_rmove(&c, &RMove::R1Minus { label: "1".into() }).is_err());
        assert!(apply_rmove(&c, &RMove::R1Minus { label: "9".into() }).is_err());
        assert!(apply_rmove(&c, &RMove::R2Minus { labels: ("1".into(), "2".into()) }).is_err());
        assert!(apply_rmove(&c, &RMove::R1Plus { gap: 4, first: Flag::Over, writhe: Sign::Plus }).is_err());
    }

    #[test]
    fn r2_with_opposite_signs_is_removable() {
        let c = code("O1+ O2- U1+ U2-");
        let m = RMove::R2Minus { labels: ("1".into(), "2".into()) };
        assert!(enumerate_rmoves(&c).contains(&m));
        assert!(apply_rmove(&c, &m).unwrap().is_empty());
    }
}
