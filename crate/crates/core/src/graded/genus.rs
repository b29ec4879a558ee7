//! Graded genus, p-genus, hyperbolicity, the `gamma_A` restriction and the
//! polynomials `u+`/`u-` of a matrix.

use std::fmt;

use serde::{Serialize, Serializer};

use super::filling::{min_rank_filling, zero_filling};
use super::{GradedError, GradedMatrix, Ring};
use crate::invariants::LaurentFreePolynomial;

/// Default cap on the total number of elements in a filling search.
pub const DEFAULT_SIZE_CAP: usize = 18;

/// A non-negative multiple of 1/2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct HalfInteger(u64);

impl HalfInteger {
    pub fn from_twice(twice: u64) -> HalfInteger {
        HalfInteger(twice)
    }

    pub fn twice(self) -> u64 {
        self.0
    }

    pub fn is_integer(self) -> bool {
        self.0.is_multiple_of(2)
    }

    /// `ceil(self / 2)`.
    pub fn half_ceil(self) -> u64 {
        self.0.div_ceil(4)
    }
}

impl fmt::Display for HalfInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

impl Serialize for HalfInteger {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if self.is_integer() {
            s.serialize_u64(self.0 / 2)
        } else {
            s.serialize_f64(self.0 as f64 / 2.0)
        }
    }
}

/// `sigma(T)`: the least half-rank of the matrix of a simple filling.
pub fn genus(t: &GradedMatrix) -> Result<HalfInteger, GradedError> {
    Ok(min_rank_filling(std::slice::from_ref(t), 0)?.0)
}

/// `sigma_p(T)`: the genus of `T` with entries reduced mod `p`.
pub fn p_genus(t: &GradedMatrix, p: u64) -> Result<HalfInteger, GradedError> {
    genus(&t.reduce_mod(p)?)
}

pub fn is_hyperbolic(t: &GradedMatrix) -> Result<bool, GradedError> {
    Ok(zero_filling(std::slice::from_ref(t), 0)?.is_some())
}

/// Restriction of `T` to `{g : b(g,s) in A}` with `A = -B u {0} u B`.
pub fn gamma_a(t: &GradedMatrix, positive: &[i64]) -> Result<GradedMatrix, GradedError> {
    let ring = t.ring();
    let allowed: Vec<i64> =
        positive.iter().flat_map(|&x| [ring.reduce(x), ring.reduce(-x)]).chain(std::iter::once(0)).collect();
    if !allowed.contains(&ring.reduce(t.b(0, 0))) {
        return Err(GradedError::NotANormal(t.b(0, 0)));
    }
    let keep: Vec<usize> = (0..t.size()).filter(|&g| allowed.contains(&ring.reduce(t.b(g, 0)))).collect();
    Ok(t.restrict(&keep))
}

/// `u+(T)` and `u-(T)`: every `g` with `b(g,s) != 0` contributes
/// `sign(g) t^|b(g,s)|` to `u+` if `b(g,s)` has the sign of `g`, to `u-`
/// otherwise.
pub fn u_pm_of_matrix(t: &GradedMatrix) -> Result<(LaurentFreePolynomial, LaurentFreePolynomial), GradedError> {
    if t.ring() != Ring::Integers {
        return Err(GradedError::WrongRing);
    }
    if !t.is_normal() {
        return Err(GradedError::NotNormal(t.b(0, 0)));
    }
    let mut plus = LaurentFreePolynomial::zero();
    let mut minus = LaurentFreePolynomial::zero();
    for g in 1..t.size() {
        let n = t.b(g, 0);
        if n == 0 {
            continue;
        }
        let sign = t.sign(g).value();
        let exp = u32::try_from(n.unsigned_abs()).expect("entry fits in u32");
        if n.signum() == sign {
            plus.add_term(exp, sign);
        } else {
            minus.add_term(exp, sign);
        }
    }
    Ok((plus, minus))
}
