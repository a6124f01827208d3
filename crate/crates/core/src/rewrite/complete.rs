//! Bounded Knuth-Bendix completion for polynomial rewriting systems.

use core::fmt;

use super::RewriteSystem;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CompletionBounds {
    pub max_rules: usize,
    pub max_rounds: usize,
}

impl Default for CompletionBounds {
    fn default() -> Self {
        CompletionBounds { max_rules: 200, max_rounds: 50 }
    }
}

#[derive(Clone, Debug)]
pub enum CompletionError {
    /// The bound was hit first; the partial system is returned.
    BoundExceeded { rounds: usize, system: RewriteSystem },
}

impl fmt::Display for CompletionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CompletionError::BoundExceeded { rounds, system } => write!(
                f,
                "completion not finished after {rounds} rounds ({} rules)",
                system.rules().len()
            ),
        }
    }
}

impl core::error::Error for CompletionError {}

/// Adds the normal form of every obstruction as a new rule until all
/// ambiguities resolve. The result presents the same quotient algebra.
pub fn complete(
    sys: &RewriteSystem,
    bounds: CompletionBounds,
) -> Result<RewriteSystem, CompletionError> {
    let mut cur = sys.clone();
    for round in 0..bounds.max_rounds {
        let report = cur.check_confluence();
        if report.confluent() {
            return Ok(cur);
        }
        for amb in report.obstructions() {
            // Earlier admissions in this round may already cover the obstruction.
            cur.admit(amb.obstruction.clone(), None);
            if cur.is_trivial() {
                return Ok(cur);
            }
            if cur.rules().len() > bounds.max_rules {
                return Err(CompletionError::BoundExceeded { rounds: round + 1, system: cur });
            }
        }
    }
    if cur.check_confluence().confluent() {
        return Ok(cur);
    }
    Err(CompletionError::BoundExceeded { rounds: bounds.max_rounds, system: cur })
}
