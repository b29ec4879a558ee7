//! The Lagrangian test over `H = H_1(Sigma; Z/m)` of the Carter surface.
//!
//! A slice knot admits a Lagrangian `L` containing `[K]` such that every
//! `K_h` with `h` in `L` is slice, and an involution on the crossings whose
//! orbits `X` all have `sum [D_x]` in `L`. Sliceness of `K_h` is replaced by
//! the computable conditions `u+ = u- = 0` and `T_bullet` hyperbolic, so a
//! failure is a sound certificate.

use std::collections::HashSet;

use serde::Serialize;

use super::SliceError;
use crate::fatgraph::{intersect, surface_basis, voltage_cover, EdgePath, EmbeddedDiagram, SpanningTree, Voltage};
use crate::graded::{is_hyperbolic, reduce_primitive, GradedError};
use crate::invariants::{graded_matrix_of, halves, u_polynomials};
use crate::linalg::unimodular_inverse;

/// Cap on `|H| = m^(2g)`.
pub const GROUP_CAP: u64 = 1 << 16;
/// Cap on the number of isotropic subgroups visited.
pub const NODE_CAP: usize = 20_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum LagrangianVerdict {
    /// `lagrangian` lists the elements of a passing `L` in surface-basis
    /// coordinates.
    Passes { lagrangian: Vec<Vec<u32>> },
    /// No Lagrangian passes. `obstructed` lists the classes `h` in `Ann([K])`
    /// found to carry a nonvanishing obstruction for `K_h`.
    Fails { lagrangians_checked: usize, obstructed: Vec<Vec<u32>> },
}

impl LagrangianVerdict {
    pub fn passes(&self) -> bool {
        matches!(self, LagrangianVerdict::Passes { .. })
    }
}

/// `H` with its basis, the intersection form and coordinates of the classes
/// the test needs.
struct Group {
    m: u32,
    rank: usize,
    size: usize,
    form: Vec<Vec<i64>>,
    /// `intersect(z_e, b_i)` for every edge (zero on tree edges).
    edge_rows: Vec<Vec<i64>>,
}

impl Group {
    fn digits(&self, mut x: u32) -> Vec<u32> {
        (0..self.rank)
            .map(|_| {
                let d = x % self.m;
                x /= self.m;
                d
            })
            .collect()
    }

    fn index(&self, v: &[i64]) -> u32 {
        let m = i64::from(self.m);
        v.iter().rev().fold(0u32, |acc, &d| acc * self.m + d.rem_euclid(m) as u32)
    }

    fn add(&self, a: u32, b: u32) -> u32 {
        let (da, db) = (self.digits(a), self.digits(b));
        let v: Vec<i64> = da.iter().zip(&db).map(|(&x, &y)| i64::from(x + y)).collect();
        self.index(&v)
    }

    fn pairing(&self, a: u32, b: u32) -> i64 {
        let (da, db) = (self.digits(a), self.digits(b));
        let mut total = 0i64;
        for i in 0..self.rank {
            for j in 0..self.rank {
                total += i64::from(da[i]) * self.form[i][j] * i64::from(db[j]);
            }
        }
        total.rem_euclid(i64::from(self.m))
    }

    fn voltage(&self, h: u32) -> Voltage {
        let dh = self.digits(h);
        let values =
            self.edge_rows.iter().map(|row| row.iter().zip(&dh).map(|(&r, &d)| r * i64::from(d)).sum()).collect();
        Voltage::from_values(values, self.m)
    }
}

struct Search<'a> {
    d: &'a EmbeddedDiagram,
    group: Group,
    /// `None` until evaluated; `Some(true)` if no obstruction was found.
    good: Vec<Option<bool>>,
    crossings: Vec<u32>,
    visited: HashSet<Vec<u64>>,
    checked: usize,
}

impl Search<'_> {
    fn is_good(&mut self, h: u32) -> bool {
        if let Some(g) = self.good[h as usize] {
            return g;
        }
        let cover = if h == 0 {
            self.d.clone()
        } else {
            voltage_cover(self.d, &self.group.voltage(h)).expect("h . [K] = 0, so the knot lifts")
        };
        let g = unobstructed(&cover);
        self.good[h as usize] = Some(g);
        g
    }

    fn bitset(&self, elems: &[u32]) -> Vec<u64> {
        let mut bits = vec![0u64; self.group.size.div_ceil(64)];
        for &e in elems {
            bits[e as usize / 64] |= 1 << (e % 64);
        }
        bits
    }

    /// Extends the isotropic subgroup `sub` (all of whose elements are good)
    /// towards a passing Lagrangian.
    fn extend(&mut self, sub: Vec<u32>, target: usize) -> Result<Option<Vec<u32>>, SliceError> {
        if sub.len() == target {
            self.checked += 1;
            let bits = self.bitset(&sub);
            return Ok(self.matching_exists(&bits).then_some(sub));
        }
        if self.visited.len() >= NODE_CAP {
            return Err(SliceError::SearchLimit { cap: NODE_CAP });
        }
        let members = self.bitset(&sub);
        let contains = |bits: &[u64], e: u32| bits[e as usize / 64] >> (e % 64) & 1 == 1;
        for v in 0..self.group.size as u32 {
            if contains(&members, v) || sub.iter().any(|&s| self.group.pairing(v, s) != 0) {
                continue;
            }
            // the subgroup generated by sub and v
            let mut next = sub.clone();
            let mut multiple = v;
            while !contains(&members, multiple) {
                next.extend(sub.iter().map(|&s| self.group.add(s, multiple)));
                multiple = self.group.add(multiple, v);
            }
            next.sort_unstable();
            next.dedup();
            let key = self.bitset(&next);
            if !self.visited.insert(key) {
                continue;
            }
            if !next.iter().all(|&h| self.is_good(h)) {
                continue;
            }
            if let Some(l) = self.extend(next, target)? {
                return Ok(Some(l));
            }
        }
        Ok(None)
    }

    /// Whether some involution on the crossings has every orbit sum in `L`.
    fn matching_exists(&self, l: &[u64]) -> bool {
        fn go(s: &Search<'_>, l: &[u64], used: &mut [bool]) -> bool {
            let contains = |e: u32| l[e as usize / 64] >> (e % 64) & 1 == 1;
            let Some(x) = used.iter().position(|&u| !u) else { return true };
            used[x] = true;
            if contains(s.crossings[x]) && go(s, l, used) {
                return true;
            }
            for y in x + 1..used.len() {
                if !used[y] && contains(s.group.add(s.crossings[x], s.crossings[y])) {
                    used[y] = true;
                    if go(s, l, used) {
                        return true;
                    }
                    used[y] = false;
                }
            }
            used[x] = false;
            false
        }
        go(self, l, &mut vec![false; self.crossings.len()])
    }
}

/// `u+ = u- = 0` and `T_bullet` hyperbolic, or too large to decide.
fn unobstructed(d: &EmbeddedDiagram) -> bool {
    let (p, m) = u_polynomials(d);
    if !p.is_zero() || !m.is_zero() {
        return false;
    }
    let (prim, _) = reduce_primitive(&graded_matrix_of(d)).expect("T(D) is skew");
    match is_hyperbolic(&prim) {
        Ok(h) => h,
        Err(GradedError::SizeCap { .. }) => true,
        Err(e) => unreachable!("{e}"),
    }
}

/// Runs the Lagrangian test at modulus `m >= 2`.
pub fn lagrangian_obstruction(d: &EmbeddedDiagram, m: u32) -> Result<LagrangianVerdict, SliceError> {
    if m < 2 {
        return Err(SliceError::BadModulus(m));
    }
    let fg = d.fatgraph();
    let basis = surface_basis(fg)?;
    let rank = basis.len();
    let size = u64::from(m).checked_pow(rank as u32).filter(|&s| s <= GROUP_CAP);
    let Some(size) = size else {
        return Err(SliceError::SizeCap { modulus: m, rank, cap: GROUP_CAP });
    };
    let form: Vec<Vec<i64>> =
        basis.iter().map(|a| basis.iter().map(|b| intersect(fg, a, b).expect("closed")).collect()).collect();
    let inverse = unimodular_inverse(&form).expect("the intersection form of a closed surface is unimodular");

    let tree = SpanningTree::new(fg)?;
    let edge_rows = (0..fg.edge_count())
        .map(|e| {
            if tree.contains(e) {
                vec![0; rank]
            } else {
                let z = tree.fundamental_cycle(fg, e);
                basis.iter().map(|b| intersect(fg, &z, b).expect("closed")).collect()
            }
        })
        .collect();
    let group = Group { m, rank, size: size as usize, form, edge_rows };

    let coords = |c: &EdgePath| -> u32 {
        let w: Vec<i64> = basis.iter().map(|b| intersect(fg, c, b).expect("closed")).collect();
        let v: Vec<i64> = (0..rank).map(|j| (0..rank).map(|i| w[i] * inverse[i][j]).sum()).collect();
        group.index(&v)
    };
    let knot = coords(d.traversal());
    let crossings = halves(d).iter().map(|h| coords(&h.path)).collect();

    let mut search = Search { d, good: vec![None; group.size], group, crossings, visited: HashSet::new(), checked: 0 };
    let target = (u64::from(m).pow(rank as u32 / 2)) as usize;
    // the cyclic subgroup generated by [K]
    let mut start = vec![0u32];
    let mut x = knot;
    while x != 0 {
        start.push(x);
        x = search.group.add(x, knot);
    }
    start.sort_unstable();
    let found = if start.iter().all(|&h| search.is_good(h)) { search.extend(start, target)? } else { None };
    Ok(match found {
        Some(l) => LagrangianVerdict::Passes { lagrangian: l.iter().map(|&h| search.group.digits(h)).collect() },
        None => LagrangianVerdict::Fails {
            lagrangians_checked: search.checked,
            obstructed: (0..search.group.size as u32)
                .filter(|&h| search.good[h as usize] == Some(false))
                .map(|h| search.group.digits(h))
                .collect(),
        },
    })
}
