use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// An integer polynomial in `t` without constant term.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentFreePolynomial {
    terms: BTreeMap<u32, i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse polynomial `{0}`")]
pub struct PolyParseError(String);

impl LaurentFreePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `coeff * t^exp`; panics on `exp == 0`.
    pub fn monomial(exp: u32, coeff: i64) -> Self {
        assert!(exp >= 1, "constant terms are not representable");
        let mut p = Self::zero();
        p.add_term(exp, coeff);
        p
    }

    pub fn add_term(&mut self, exp: u32, coeff: i64) {
        assert!(exp >= 1, "constant terms are not representable");
        let c = self.terms.entry(exp).or_insert(0);
        *c += coeff;
        if *c == 0 {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exp: u32) -> i64 {
        self.terms.get(&exp).copied().unwrap_or(0)
    }

    /// `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn derivative_at_one(&self) -> i64 {
        self.terms().map(|(e, c)| i64::from(e) * c).sum()
    }

    pub fn eval(&self, t: i64) -> i64 {
        self.terms().map(|(e, c)| c * t.pow(e)).sum()
    }
}

impl fmt::Display for LaurentFreePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.terms().enumerate() {
            let mag = c.unsigned_abs();
            match (k, c < 0) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if mag != 1 {
                write!(f, "{mag}")?;
            }
            f.write_str("t")?;
            if e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for LaurentFreePolynomial {
    type Err = PolyParseError;

    /// Accepts the display form, e.g. `2t^3 - t^5`, `-t`, `0`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || PolyParseError(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact == "0" {
            return Ok(Self::zero());
        }
        if compact.is_empty() {
            return Err(err());
        }
        let mut p = Self::zero();
        let mut rest = compact.as_str();
        while !rest.is_empty() {
            let (sign, body) = match rest.as_bytes()[0] {
                b'-' => (-1, &rest[1..]),
                b'+' => (1, &rest[1..]),
                _ => (1, rest),
            };
            let end = body[1..].find(['+', '-']).map_or(body.len(), |i| i + 1);
            let (term, tail) = body.split_at(end);
            rest = tail;
            let (coeff, power) = term.split_once('t').ok_or_else(err)?;
            let coeff: i64 = if coeff.is_empty() { 1 } else { coeff.parse().map_err(|_| err())? };
            let exp: u32 = match power.strip_prefix('^') {
                None if power.is_empty() => 1,
                Some(e) => e.parse().map_err(|_| err())?,
                None => return Err(err()),
            };
            if exp == 0 {
                return Err(err());
            }
            p.add_term(exp, sign * coeff);
        }
        Ok(p)
    }
}

impl Serialize for LaurentFreePolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for LaurentFreePolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl AddAssign<&LaurentFreePolynomial> for LaurentFreePolynomial {
    fn add_assign(&mut self, rhs: &LaurentFreePolynomial) {
        for (e, c) in rhs.terms() {
            self.add_term(e, c);
        }
    }
}

impl SubAssign<&LaurentFreePolynomial> for LaurentFreePolynomial {
    fn sub_assign(&mut self, rhs: &LaurentFreePolynomial) {
        for (e, c) in rhs.terms() {
            self.add_term(e, -c);
        }
    }
}

impl Add for &LaurentFreePolynomial {
    type Output = LaurentFreePolynomial;

    fn add(self, rhs: &LaurentFreePolynomial) -> LaurentFreePolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &LaurentFreePolynomial {
    type Output = LaurentFreePolynomial;

    fn sub(self, rhs: &LaurentFreePolynomial) -> LaurentFreePolynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Add for LaurentFreePolynomial {
    type Output = LaurentFreePolynomial;

    fn add(self, rhs: LaurentFreePolynomial) -> LaurentFreePolynomial {
        &self + &rhs
    }
}

impl Sub for LaurentFreePolynomial {
    type Output = LaurentFreePolynomial;

    fn sub(self, rhs: LaurentFreePolynomial) -> LaurentFreePolynomial {
        &self - &rhs
    }
}

impl Neg for &LaurentFreePolynomial {
    type Output = LaurentFreePolynomial;

    fn neg(self) -> LaurentFreePolynomial {
        LaurentFreePolynomial { terms: self.terms.iter().map(|(&e, &c)| (e, -c)).collect() }
    }
}

impl Neg for LaurentFreePolynomial {
    type Output = LaurentFreePolynomial;

    fn neg(self) -> LaurentFreePolynomial {
        -&self
    }
}

impl std::iter::Sum for LaurentFreePolynomial {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, p| acc + p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display() {
        let mut p = LaurentFreePolynomial::monomial(3, 2);
        p.add_term(5, -1);
        assert_eq!(p.to_string(), "2t^3 - t^5");
        assert_eq!(LaurentFreePolynomial::monomial(1, 1).to_string(), "t");
        assert_eq!(LaurentFreePolynomial::monomial(1, -1).to_string(), "-t");
        assert_eq!(LaurentFreePolynomial::zero().to_string(), "0");
        assert_eq!((-p).to_string(), "-2t^3 + t^5");
    }

    #[test]
    fn parse_round_trip() {
        for s in ["0", "t", "-t", "2t^3 - t^5", "-3t + 4t^2 - t^10"] {
            assert_eq!(s.parse::<LaurentFreePolynomial>().unwrap().to_string(), s);
        }
        assert!("1".parse::<LaurentFreePolynomial>().is_err());
        assert!("t^0".parse::<LaurentFreePolynomial>().is_err());
        assert!("".parse::<LaurentFreePolynomial>().is_err());
    }

    #[test]
    fn cancellation_keeps_no_zero_terms() {
        let t = LaurentFreePolynomial::monomial(1, 1);
        assert!((&t - &t).is_zero());
        assert_eq!(&t - &t, LaurentFreePolynomial::zero());
    }

    #[test]
    fn derivative() {
        let p: LaurentFreePolynomial = "2t^3 - t^5".parse().unwrap();
        assert_eq!(p.derivative_at_one(), 1);
        assert_eq!(p.eval(1), 1);
    }
}
