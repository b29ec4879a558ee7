//! Sliceness obstructions collected into one report.

mod lagrangian;

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::fatgraph::{EmbeddedDiagram, FatgraphError};
use crate::graded::{genus, p_genus, GradedError, HalfInteger};
use crate::invariants::{higher_invariants, InvariantsError, LaurentFreePolynomial, DEFAULT_MAX_CROSSINGS};

pub use lagrangian::{lagrangian_obstruction, LagrangianVerdict, GROUP_CAP, NODE_CAP};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SliceError {
    #[error(transparent)]
    Fatgraph(#[from] FatgraphError),
    #[error("modulus must be at least 2, got {0}")]
    BadModulus(u32),
    #[error("H_1 over Z/{modulus} has rank {rank}, over the cap of {cap} elements")]
    SizeCap { modulus: u32, rank: usize, cap: u64 },
    #[error("Lagrangian search visited more than {cap} subgroups")]
    SearchLimit { cap: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SliceConfig {
    /// Covering sequences checked in addition to the knot itself.
    pub covers: Vec<Vec<u32>>,
    pub primes: Vec<u64>,
    /// Moduli for the Lagrangian test.
    pub lagrangian: Vec<u32>,
    pub max_crossings: usize,
}

impl Default for SliceConfig {
    fn default() -> SliceConfig {
        SliceConfig {
            covers: vec![vec![2], vec![3]],
            primes: vec![2, 3, 5],
            lagrangian: vec![2],
            max_crossings: DEFAULT_MAX_CROSSINGS,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    NotSlice,
    Inconclusive,
}

/// One failed obstruction. `cover` is the covering sequence, empty for the
/// knot itself.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Reason {
    UNonzero {
        cover: Vec<u32>,
        u_plus: LaurentFreePolynomial,
        u_minus: LaurentFreePolynomial,
    },
    NotHyperbolic {
        cover: Vec<u32>,
        sigma: HalfInteger,
    },
    PGenus {
        cover: Vec<u32>,
        p: u64,
        sigma_p: HalfInteger,
    },
    /// Run on the Carter surface of the diagram.
    Lagrangian {
        m: u32,
        surface: &'static str,
    },
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cover = |c: &[u32]| {
            if c.is_empty() {
                String::new()
            } else {
                format!(" on cover {c:?}")
            }
        };
        match self {
            Reason::UNonzero { cover: c, u_plus, u_minus } => write!(f, "u+ = {u_plus}, u- = {u_minus}{}", cover(c)),
            Reason::NotHyperbolic { cover: c, sigma } => write!(f, "T is not hyperbolic, genus {sigma}{}", cover(c)),
            Reason::PGenus { cover: c, p, sigma_p } => write!(f, "{p}-genus {sigma_p}{}", cover(c)),
            Reason::Lagrangian { m, surface } => write!(f, "no Lagrangian passes over Z/{m} ({surface} surface)"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ObstructionReport {
    pub verdict: Verdict,
    pub reasons: Vec<Reason>,
    pub sg_lower_bound: u64,
    /// Some configured check hit a size cap and was skipped.
    pub partial: bool,
}

impl fmt::Display for ObstructionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "verdict: {:?}", self.verdict)?;
        for r in &self.reasons {
            writeln!(f, "  {r}")?;
        }
        write!(f, "slice genus >= {}", self.sg_lower_bound)?;
        if self.partial {
            write!(f, "\npartial: some checks hit a size cap")?;
        }
        Ok(())
    }
}

/// Checks `u+-` and hyperbolicity of `T_bullet` for the knot and each
/// configured covering, the `p`-genera, and the Lagrangian test. The slice
/// genus bound is `ceil(sigma(T_bullet) / 2)`.
pub fn obstruction_report(d: &EmbeddedDiagram, config: &SliceConfig) -> ObstructionReport {
    let mut reasons = Vec::new();
    let mut partial = false;
    let mut sg_lower_bound = 0;
    let sequences = std::iter::once(Vec::new()).chain(config.covers.iter().cloned());
    for (k, seq) in sequences.enumerate() {
        let inv = match higher_invariants(d, &seq, config.max_crossings) {
            Ok(inv) => inv,
            Err(InvariantsError::ResourceLimit { .. }) => {
                partial = true;
                continue;
            }
            Err(InvariantsError::Fatgraph(e)) => unreachable!("covers of a Carter surface are well formed: {e}"),
        };
        if !inv.u_plus.is_zero() || !inv.u_minus.is_zero() {
            reasons.push(Reason::UNonzero { cover: seq.clone(), u_plus: inv.u_plus, u_minus: inv.u_minus });
        }
        match genus(&inv.primitive) {
            Ok(sigma) => {
                if k == 0 {
                    sg_lower_bound = sigma.half_ceil();
                }
                if sigma.twice() > 0 {
                    reasons.push(Reason::NotHyperbolic { cover: seq.clone(), sigma });
                }
            }
            Err(GradedError::SizeCap { .. }) => partial = true,
            Err(e) => unreachable!("T_bullet is a skew matrix over Z: {e}"),
        }
        for &p in &config.primes {
            match p_genus(&inv.primitive, p) {
                Ok(sigma_p) if sigma_p.twice() > 0 => reasons.push(Reason::PGenus { cover: seq.clone(), p, sigma_p }),
                Ok(_) => {}
                Err(GradedError::SizeCap { .. }) => partial = true,
                Err(e) => unreachable!("configured primes are validated: {e}"),
            }
        }
    }
    for &m in &config.lagrangian {
        match lagrangian_obstruction(d, m) {
            Ok(v) if !v.passes() => reasons.push(Reason::Lagrangian { m, surface: "carter" }),
            Ok(_) => {}
            Err(_) => partial = true,
        }
    }
    let verdict = if reasons.is_empty() { Verdict::Inconclusive } else { Verdict::NotSlice };
    ObstructionReport { verdict, reasons, sg_lower_bound, partial }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{alpha_pq, torus_two_crossing, trefoil};
    use crate::fatgraph::build_carter;
    use crate::Sign;

    #[test]
    fn two_crossing_knot_is_not_slice() {
        let r = obstruction_report(&build_carter(&torus_two_crossing()), &SliceConfig::default());
        assert_eq!(r.verdict, Verdict::NotSlice);
        assert_eq!(r.sg_lower_bound, 1);
        assert!(!r.partial);
        assert!(
            matches!(&r.reasons[0], Reason::UNonzero { cover, u_plus, .. } if cover.is_empty() && u_plus.to_string() == "t")
        );
        assert!(r.reasons.contains(&Reason::Lagrangian { m: 2, surface: "carter" }));
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["reasons"][0]["kind"], "u_nonzero");
        assert_eq!(json["reasons"][0]["u_plus"], "t");
    }

    #[test]
    fn trefoil_is_inconclusive() {
        let r = obstruction_report(&build_carter(&trefoil()), &SliceConfig::default());
        assert_eq!(r.verdict, Verdict::Inconclusive);
        assert!(r.reasons.is_empty());
        assert_eq!(r.sg_lower_bound, 0);
    }

    #[test]
    fn alpha_two_three() {
        let d = build_carter(&alpha_pq(2, 3, &[Sign::Plus; 5]).unwrap());
        let r = obstruction_report(&d, &SliceConfig { lagrangian: vec![], ..SliceConfig::default() });
        assert_eq!(r.verdict, Verdict::NotSlice);
        assert!(r.reasons.iter().any(|x| matches!(x, Reason::NotHyperbolic { cover, .. } if cover.is_empty())));
        // sigma of the 6x6 alpha(2,3) matrix is 2
        assert_eq!(r.sg_lower_bound, 1);
    }
}
