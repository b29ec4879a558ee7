//! Knot diagrams as signed Gauss codes.
//!
//! A code is a cyclic word of passages `O<label><sign>` / `U<label><sign>`.
//! Every crossing label occurs twice, once over and once under, and both
//! occurrences carry the crossing's writhe.

mod code;
mod families;
mod moves;

use thiserror::Error;

pub use code::{Flag, GaussCode, Passage};
pub use families::{alpha_pq, figure_eight, random_code, torus_two_crossing, trefoil};
pub use moves::{apply_rmove, enumerate_rmoves, RMove, RMoveKind};

use crate::invariants::LaurentFreePolynomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("malformed token `{0}`")]
    MalformedToken(String),
    #[error("label `{label}` occurs {count} times, expected 2")]
    OccurrenceCount { label: String, count: usize },
    #[error("label `{0}` has two passes with the same over/under flag")]
    FlagConflict(String),
    #[error("label `{0}` carries two different signs")]
    SignConflict(String),
    #[error("move does not apply: {0}")]
    InapplicableMove(String),
    #[error("sign function must be defined on exactly {expected} crossings, got {got}")]
    BadSignDomain { expected: usize, got: usize },
}

/// Whether `(p_plus, p_minus)` can be the pair `(u+, u-)` of some knot:
/// both have zero constant term and equal derivatives at `t = 1`.
pub fn realizable_pair_check(p_plus: &LaurentFreePolynomial, p_minus: &LaurentFreePolynomial) -> bool {
    // The constant term is structurally absent from a LaurentFreePolynomial.
    p_plus.derivative_at_one() == p_minus.derivative_at_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn realizability() {
        let t = LaurentFreePolynomial::monomial(1, 1);
        let zero = LaurentFreePolynomial::zero();
        assert!(realizable_pair_check(&t, &t));
        assert!(!realizable_pair_check(&t, &zero));
        assert!(realizable_pair_check(&zero, &zero));
        // 2t^3 and 3t^2 have equal derivative 6 at t = 1
        let a = LaurentFreePolynomial::monomial(3, 2);
        let b = LaurentFreePolynomial::monomial(2, 3);
        assert!(realizable_pair_check(&a, &b));
    }
}
