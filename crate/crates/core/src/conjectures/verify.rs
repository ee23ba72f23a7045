use std::fmt;

use num_traits::Signed;

use super::score::{evaluate, Mode};
use super::{check_hypotheses, ConjectureId, Score, Violation, DEFAULT_TAU};
use crate::graph::Graph;
use crate::invariants::{InvariantError, STRICT_RESIDUAL_TARGET};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// Hypotheses hold and the score is positive beyond its error bound.
    Certified,
    /// The error band around the score straddles the acceptance threshold.
    Uncertain,
    Rejected,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Certified => "Certified",
            Verdict::Uncertain => "Uncertain",
            Verdict::Rejected => "Rejected",
        })
    }
}

#[derive(Debug, Clone)]
pub struct Verification {
    pub verdict: Verdict,
    pub violations: Vec<Violation>,
    pub score: Option<Score>,
    pub error_bound: f64,
    pub note: Option<String>,
}

/// Recomputes the score with exact rational sub-terms and a tightened
/// eigensolver residual target, then decides:
///
/// * exact scores: Certified iff positive, otherwise Rejected;
/// * other scores: Certified iff `value − bound > 0`, Rejected iff
///   `value + bound ≤ τ`, Uncertain in between.
pub fn verify_strict(id: ConjectureId, g: &Graph) -> Verification {
    let violations = check_hypotheses(id, g);
    if !violations.is_empty() {
        return Verification {
            verdict: Verdict::Rejected,
            violations,
            score: None,
            error_bound: 0.0,
            note: Some("hypotheses not satisfied".into()),
        };
    }
    let score = match evaluate(id, g, Mode::Full { target: STRICT_RESIDUAL_TARGET }) {
        Ok(s) => s,
        Err(InvariantError::NoConvergence { residual }) => {
            return Verification {
                verdict: Verdict::Uncertain,
                violations,
                score: None,
                error_bound: f64::INFINITY,
                note: Some(format!("eigensolver missed the strict residual target (residual {residual:e})")),
            };
        }
        Err(e) => {
            return Verification {
                verdict: Verdict::Rejected,
                violations,
                score: None,
                error_bound: 0.0,
                note: Some(e.to_string()),
            };
        }
    };

    let bound = score.error_bound();
    let (verdict, note) = if score.is_invalid() {
        (Verdict::Rejected, Some("score undefined for this graph".to_string()))
    } else if let Some(q) = &score.exact {
        let v = if q.is_positive() { Verdict::Certified } else { Verdict::Rejected };
        (v, None)
    } else if score.value - bound > 0.0 {
        (Verdict::Certified, None)
    } else if score.value + bound <= DEFAULT_TAU {
        (Verdict::Rejected, None)
    } else {
        (Verdict::Uncertain, None)
    };
    Verification {
        verdict,
        violations,
        error_bound: bound,
        score: Some(score),
        note,
    }
}
