//! Fillings of families of graded matrices and the searches built on them.
//!
//! A family `T_1, ..., T_r` lives on the disjoint union of the `G_t`. A
//! filling is a set of short vectors: every non-base element occurs in
//! exactly one of them with coefficient 1, each vector holds one element or
//! two elements of opposite sign plus base elements, and one vector is
//! `s_1 + ... + s_r`.
//!
//! Adding multiples of `s_1 + ... + s_r` to the other vectors does not change
//! the module they span, and extra vectors made of base elements only can
//! only raise the rank. Searches therefore fix the coefficient of `s_1` to 0
//! in every vector but the designated one, and range the other `r - 1` base
//! coefficients over `[-bound, bound]`.

use std::fmt;

use serde::Serialize;

use super::genus::{genus, is_hyperbolic, u_pm_of_matrix, HalfInteger, DEFAULT_SIZE_CAP};
use super::iso::isomorphism;
use super::{GradedError, GradedMatrix, Ring};

pub const DEFAULT_COEFF_BOUND: i64 = 2;

/// One short vector: non-base elements `(matrix, element)` with coefficient
/// 1, and a coefficient for each base element `s_t`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FillingVector {
    pub elements: Vec<(usize, usize)>,
    pub base: Vec<i64>,
}

/// A filling; `vectors[0]` is `s_1 + ... + s_r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Filling {
    pub vectors: Vec<FillingVector>,
}

impl Filling {
    /// Human-readable vectors, elements written `name` for a single matrix and
    /// `name.t` (1-based `t`) for families.
    pub fn describe(&self, ts: &[GradedMatrix]) -> Vec<String> {
        let tag = |t: usize, name: &str| if ts.len() == 1 { name.to_string() } else { format!("{name}.{}", t + 1) };
        self.vectors
            .iter()
            .map(|v| {
                let mut s = String::new();
                let mut push = |coeff: i64, term: String| {
                    match (s.is_empty(), coeff < 0) {
                        (true, true) => s.push('-'),
                        (true, false) => {}
                        (false, true) => s.push_str(" - "),
                        (false, false) => s.push_str(" + "),
                    }
                    if coeff.abs() != 1 {
                        s.push_str(&coeff.abs().to_string());
                    }
                    s.push_str(&term);
                };
                for &(t, i) in &v.elements {
                    push(1, tag(t, ts[t].name(i)));
                }
                for (t, &c) in v.base.iter().enumerate() {
                    if c != 0 {
                        push(c, tag(t, "s"));
                    }
                }
                if s.is_empty() {
                    s.push('0');
                }
                s
            })
            .collect()
    }

    /// Checks the shape conditions of a filling of `ts`.
    pub fn is_valid(&self, ts: &[GradedMatrix]) -> bool {
        let r = ts.len();
        let Some(first) = self.vectors.first() else { return false };
        if !first.elements.is_empty() || first.base != vec![1; r] {
            return false;
        }
        let mut seen: Vec<Vec<bool>> = ts.iter().map(|t| vec![false; t.size()]).collect();
        for v in &self.vectors {
            if v.base.len() != r {
                return false;
            }
            match v.elements.as_slice() {
                [] | [_] => {}
                [(ta, a), (tb, b)] => {
                    if ts[*ta].sign(*a) == ts[*tb].sign(*b) {
                        return false;
                    }
                }
                _ => return false,
            }
            for &(t, i) in &v.elements {
                if t >= r || i == 0 || i >= ts[t].size() || seen[t][i] {
                    return false;
                }
                seen[t][i] = true;
            }
        }
        seen.iter().all(|s| s[1..].iter().all(|&x| x))
    }
}

impl Serialize for Filling {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(self.vectors.len()))?;
        for v in &self.vectors {
            seq.serialize_element(&(&v.elements, &v.base))?;
        }
        seq.end()
    }
}

/// Outcome of a cobordism test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict")]
pub enum CobordismVerdict {
    /// A filling of `(T1, -T2)` with zero matrix.
    Cobordant {
        certificate: Filling,
        vectors: Vec<String>,
    },
    NotCobordant {
        reason: String,
    },
    /// No certificate within the coefficient bound.
    Unknown {
        bound: i64,
    },
}

impl fmt::Display for CobordismVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CobordismVerdict::Cobordant { vectors, .. } => write!(f, "Cobordant: {{{}}}", vectors.join(", ")),
            CobordismVerdict::NotCobordant { reason } => write!(f, "NotCobordant: {reason}"),
            CobordismVerdict::Unknown { bound } => {
                write!(f, "Unknown: no certificate with coefficients in [-{bound}, {bound}]")
            }
        }
    }
}

/// The matrix `(b(l_i, l_j))` of a filling.
pub fn filling_matrix(ts: &[GradedMatrix], filling: &Filling) -> Vec<Vec<i64>> {
    let ring = ts[0].ring();
    let dense: Vec<Vec<Vec<i64>>> = filling.vectors.iter().map(|v| dense_vector(ts, v)).collect();
    dense.iter().map(|a| dense.iter().map(|b| ring.reduce(pair(ts, a, b))).collect()).collect()
}

fn dense_vector(ts: &[GradedMatrix], v: &FillingVector) -> Vec<Vec<i64>> {
    let mut d: Vec<Vec<i64>> = ts.iter().map(|t| vec![0; t.size()]).collect();
    for (t, &c) in v.base.iter().enumerate() {
        d[t][0] = c;
    }
    for &(t, i) in &v.elements {
        d[t][i] += 1;
    }
    d
}

fn pair(ts: &[GradedMatrix], a: &[Vec<i64>], b: &[Vec<i64>]) -> i64 {
    let mut total = 0i64;
    for (t, m) in ts.iter().enumerate() {
        for (i, &x) in a[t].iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b[t].iter().enumerate() {
                if y != 0 {
                    total += x * y * m.b(i, j);
                }
            }
        }
    }
    total
}

fn check_family(ts: &[GradedMatrix], cap: usize) -> Result<Ring, GradedError> {
    let ring = ts.first().ok_or_else(|| GradedError::Malformed("empty family".into()))?.ring();
    if ts.iter().any(|t| t.ring() != ring) {
        return Err(GradedError::RingMismatch);
    }
    let size: usize = ts.iter().map(GradedMatrix::size).sum();
    if size > cap {
        return Err(GradedError::SizeCap { size, cap });
    }
    Ok(ring)
}

/// What a search does at each complete filling.
enum Goal {
    /// Stop at the first filling with zero matrix.
    Zero,
    /// Minimise the rank; `best` holds the best rank so far.
    MinRank { best: Option<usize> },
    /// Record every filling.
    Collect(Vec<Filling>),
}

struct Search<'a> {
    ts: &'a [GradedMatrix],
    ring: Ring,
    bound: i64,
    /// Non-base elements in search order.
    items: Vec<(usize, usize)>,
    assigned: Vec<bool>,
    chosen: Vec<FillingVector>,
    dense: Vec<Vec<Vec<i64>>>,
    gram: Vec<Vec<i64>>,
    goal: Goal,
    found: Option<Filling>,
}

impl<'a> Search<'a> {
    fn new(ts: &'a [GradedMatrix], bound: i64, goal: Goal) -> Search<'a> {
        let ring = ts[0].ring();
        let items: Vec<(usize, usize)> =
            ts.iter().enumerate().flat_map(|(t, m)| (1..m.size()).map(move |i| (t, i))).collect();
        let mut s = Search {
            ts,
            ring,
            bound,
            assigned: vec![false; items.len()],
            items,
            chosen: Vec::new(),
            dense: Vec::new(),
            gram: Vec::new(),
            goal,
            found: None,
        };
        let designated = FillingVector { elements: Vec::new(), base: vec![1; ts.len()] };
        s.push(designated);
        s
    }

    fn sign(&self, k: usize) -> crate::Sign {
        let (t, i) = self.items[k];
        self.ts[t].sign(i)
    }

    /// Appends a vector, returning its row of pairings (with itself last).
    fn push(&mut self, v: FillingVector) -> Vec<i64> {
        let d = dense_vector(self.ts, &v);
        let row: Vec<i64> = self
            .dense
            .iter()
            .map(|o| self.ring.reduce(pair(self.ts, &d, o)))
            .chain(std::iter::once(self.ring.reduce(pair(self.ts, &d, &d))))
            .collect();
        let col: Vec<i64> = self.dense.iter().map(|o| self.ring.reduce(pair(self.ts, o, &d))).collect();
        for (r, &c) in self.gram.iter_mut().zip(&col) {
            r.push(c);
        }
        self.gram.push(row.clone());
        self.dense.push(d);
        self.chosen.push(v);
        row.into_iter().chain(col).collect()
    }

    fn pop(&mut self) {
        self.chosen.pop();
        self.dense.pop();
        self.gram.pop();
        for r in &mut self.gram {
            r.pop();
        }
    }

    fn done(&self) -> bool {
        matches!(self.goal, Goal::Zero if self.found.is_some()) || matches!(self.goal, Goal::MinRank { best: Some(0) })
    }

    /// Returns false when the current partial filling cannot improve on the goal.
    fn admissible(&self, pairings: &[i64]) -> bool {
        match &self.goal {
            Goal::Zero => pairings.iter().all(|&x| x == 0),
            Goal::MinRank { best: Some(b) } => self.ring.rank(&self.gram) < *b,
            _ => true,
        }
    }

    fn base_choices(&self) -> Vec<Vec<i64>> {
        let r = self.ts.len();
        let mut out = vec![vec![0i64]];
        for _ in 1..r {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    (-self.bound..=self.bound).map(move |c| {
                        let mut p = prefix.clone();
                        p.push(c);
                        p
                    })
                })
                .collect();
        }
        out
    }

    fn run(&mut self) {
        if self.done() {
            return;
        }
        let Some(k) = self.assigned.iter().position(|&a| !a) else {
            let filling = Filling { vectors: self.chosen.clone() };
            match &mut self.goal {
                Goal::Zero => self.found = Some(filling),
                Goal::MinRank { best } => {
                    let rank = self.ring.rank(&self.gram);
                    if best.is_none_or(|b| rank < b) {
                        *best = Some(rank);
                        self.found = Some(filling);
                    }
                }
                Goal::Collect(all) => all.push(filling),
            }
            return;
        };
        self.assigned[k] = true;
        let partners: Vec<Option<usize>> = std::iter::once(None)
            .chain((k + 1..self.items.len()).filter(|&j| !self.assigned[j] && self.sign(j) != self.sign(k)).map(Some))
            .collect();
        let bases = self.base_choices();
        for partner in partners {
            if let Some(j) = partner {
                self.assigned[j] = true;
            }
            let mut elements = vec![self.items[k]];
            elements.extend(partner.map(|j| self.items[j]));
            for base in &bases {
                let pairings = self.push(FillingVector { elements: elements.clone(), base: base.clone() });
                if self.admissible(&pairings) {
                    self.run();
                }
                self.pop();
                if self.done() {
                    break;
                }
            }
            if let Some(j) = partner {
                self.assigned[j] = false;
            }
            if self.done() {
                break;
            }
        }
        self.assigned[k] = false;
    }
}

/// All simple fillings of a single matrix: one per involution on `G - {s}`
/// whose free orbits pair elements of opposite sign.
pub fn simple_fillings(t: &GradedMatrix) -> Result<Vec<Filling>, GradedError> {
    tuple_fillings(std::slice::from_ref(t), 0)
}

/// All normalized fillings of a family with free base coefficients in
/// `[-bound, bound]`.
pub fn tuple_fillings(ts: &[GradedMatrix], bound: i64) -> Result<Vec<Filling>, GradedError> {
    check_family(ts, DEFAULT_SIZE_CAP)?;
    let mut s = Search::new(ts, bound, Goal::Collect(Vec::new()));
    s.run();
    match s.goal {
        Goal::Collect(all) => Ok(all),
        _ => unreachable!(),
    }
}

/// Minimal `sigma(lambda)` over the bounded enumeration: an upper bound for
/// the genus of the family, exact for a single matrix.
pub fn tuple_genus_upper(ts: &[GradedMatrix], bound: i64) -> Result<HalfInteger, GradedError> {
    Ok(min_rank_filling(ts, bound)?.0)
}

pub(crate) fn min_rank_filling(ts: &[GradedMatrix], bound: i64) -> Result<(HalfInteger, Filling), GradedError> {
    check_family(ts, DEFAULT_SIZE_CAP)?;
    let mut s = Search::new(ts, bound, Goal::MinRank { best: None });
    s.run();
    let Goal::MinRank { best: Some(rank) } = s.goal else { unreachable!("a filling always exists") };
    Ok((HalfInteger::from_twice(rank as u64), s.found.expect("filling")))
}

/// A filling with zero matrix, if one exists within the bound.
pub(crate) fn zero_filling(ts: &[GradedMatrix], bound: i64) -> Result<Option<Filling>, GradedError> {
    check_family(ts, DEFAULT_SIZE_CAP)?;
    let mut s = Search::new(ts, bound, Goal::Zero);
    if s.gram[0][0] != 0 {
        return Ok(None);
    }
    s.run();
    Ok(s.found)
}

fn certified(ts: &[GradedMatrix], filling: Filling) -> CobordismVerdict {
    debug_assert!(filling.is_valid(ts));
    debug_assert!(filling_matrix(ts, &filling).iter().flatten().all(|&x| x == 0));
    CobordismVerdict::Cobordant { vectors: filling.describe(ts), certificate: filling }
}

/// Decides or bounds whether `T1` and `T2` are cobordant, i.e. whether the
/// pair `(T1, -T2)` has a filling with zero matrix.
pub fn is_cobordant(t1: &GradedMatrix, t2: &GradedMatrix, bound: i64) -> Result<CobordismVerdict, GradedError> {
    if t1.ring() != t2.ring() {
        return Err(GradedError::RingMismatch);
    }
    let ring = t1.ring();
    let pair_family = [t1.clone(), t2.neg()];
    check_family(&pair_family, DEFAULT_SIZE_CAP)?;

    if let Some(f) = isomorphism(t1, t2) {
        // g + f(g)' for every g, which pairs opposite signs in (T1, -T2)
        let vectors = std::iter::once(FillingVector { elements: Vec::new(), base: vec![1, 1] })
            .chain((1..t1.size()).map(|g| FillingVector { elements: vec![(0, g), (1, f[g])], base: vec![0, 0] }))
            .collect();
        return Ok(certified(&pair_family, Filling { vectors }));
    }
    if !ring.is_zero(t1.b(0, 0) - t2.b(0, 0)) {
        return Ok(CobordismVerdict::NotCobordant {
            reason: format!("b(s,s) differs: {} vs {}", t1.b(0, 0), t2.b(0, 0)),
        });
    }
    for (a, b, swap) in [(t1, t2, false), (t2, t1, true)] {
        if b.is_trivial() {
            if !is_hyperbolic(a)? {
                return Ok(CobordismVerdict::NotCobordant {
                    reason: "the non-trivial matrix is not hyperbolic".into(),
                });
            }
            let zero = zero_filling(std::slice::from_ref(a), 0)?.expect("hyperbolic");
            let vectors = zero
                .vectors
                .into_iter()
                .map(|v| {
                    let trivial_coeff = if v.elements.is_empty() { 1 } else { 0 };
                    let base = if swap { vec![trivial_coeff, v.base[0]] } else { vec![v.base[0], trivial_coeff] };
                    let elements = v.elements.into_iter().map(|(_, i)| (usize::from(swap), i)).collect();
                    FillingVector { elements, base }
                })
                .collect();
            return Ok(certified(&pair_family, Filling { vectors }));
        }
    }
    if ring == Ring::Integers && t1.is_normal() && t2.is_normal() {
        let (u1, u2) = (u_pm_of_matrix(t1)?, u_pm_of_matrix(t2)?);
        if u1 != u2 {
            return Ok(CobordismVerdict::NotCobordant {
                reason: format!("u polynomials differ: ({}, {}) vs ({}, {})", u1.0, u1.1, u2.0, u2.1),
            });
        }
    }
    let (g1, g2) = (genus(t1)?, genus(t2)?);
    if g1 != g2 {
        return Ok(CobordismVerdict::NotCobordant { reason: format!("genus differs: {g1} vs {g2}") });
    }
    Ok(match zero_filling(&pair_family, bound)? {
        Some(f) => certified(&pair_family, f),
        None => CobordismVerdict::Unknown { bound },
    })
}
