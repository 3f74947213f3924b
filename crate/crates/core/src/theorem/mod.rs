//! The join chromatic-number formula, its lower bound, instance generators
//! and the brute-force verification harness.

pub mod enumerate;
pub mod verify;

use thiserror::Error;

pub use enumerate::{enumerate_signed_graphs, random_signed_graph, EnumerationTooLarge};
pub use verify::{
    exhaustive_sweep, exhaustive_sweep_up_to, random_pairs, random_sweep, verify_pair,
    verify_pairs, Constructive, Finding, FindingKind, PairRecord, PairSizes, PartStats, StatsCache,
    Summary, VerificationReport, VerifyError,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PredictionError {
    #[error("maximum deficiency {max_def} exceeds half the chromatic number {chi}")]
    InconsistentStats { chi: usize, max_def: usize },
}

/// `(χ, M, exceptional)` of one side of a join.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SideStats {
    pub chi: usize,
    pub max_def: usize,
    pub exceptional: bool,
}

impl SideStats {
    pub fn new(chi: usize, max_def: usize, exceptional: bool) -> Self {
        SideStats {
            chi,
            max_def,
            exceptional,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct JoinPrediction {
    pub value: usize,
    pub exception_applied: bool,
    pub lower_bound: i64,
}

/// `χ₁ + χ₂ − M₁ − M₂`.
pub fn lower_bound(chi1: usize, max_def1: usize, chi2: usize, max_def2: usize) -> i64 {
    chi1 as i64 + chi2 as i64 - max_def1 as i64 - max_def2 as i64
}

/// Whether the exceptional bump applies: both chromatic numbers even, exactly
/// one maximum deficiency odd, both graphs exceptional.
pub fn exception_holds(a: SideStats, b: SideStats) -> bool {
    a.chi % 2 == 0
        && b.chi % 2 == 0
        && (a.max_def + b.max_def) % 2 == 1
        && a.exceptional
        && b.exceptional
}

/// Predicted `χ(Σ₁ ∨₊ Σ₂)`. Sides are reordered internally so that the first
/// has the larger maximum deficiency.
pub fn predicted_chromatic(
    side1: SideStats,
    side2: SideStats,
) -> Result<JoinPrediction, PredictionError> {
    for s in [side1, side2] {
        if s.chi == 0 || s.max_def > s.chi / 2 {
            return Err(PredictionError::InconsistentStats {
                chi: s.chi,
                max_def: s.max_def,
            });
        }
    }
    let (a, b) = if side1.max_def < side2.max_def {
        (side2, side1)
    } else {
        (side1, side2)
    };
    let bound = lower_bound(a.chi, a.max_def, b.chi, b.max_def);
    let exception_applied = exception_holds(a, b);
    let first = bound + i64::from(exception_applied);
    let value = first.max(a.chi as i64) as usize;
    Ok(JoinPrediction {
        value,
        exception_applied,
        lower_bound: bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(chi: usize, m: usize, exc: bool) -> SideStats {
        SideStats::new(chi, m, exc)
    }

    #[test]
    fn lower_bounds() {
        assert_eq!(lower_bound(2, 1, 2, 1), 2);
        assert_eq!(lower_bound(6, 3, 1, 0), 4);
        assert_eq!(lower_bound(2, 0, 2, 0), 4);
    }

    #[test]
    fn predictions() {
        let p = predicted_chromatic(s(2, 1, true), s(2, 1, true)).unwrap();
        assert_eq!((p.value, p.exception_applied), (2, false));
        let p = predicted_chromatic(s(2, 1, true), s(2, 0, true)).unwrap();
        assert_eq!((p.value, p.exception_applied), (4, true));
        let p = predicted_chromatic(s(6, 3, true), s(1, 0, false)).unwrap();
        assert_eq!((p.value, p.exception_applied, p.lower_bound), (6, false, 4));
        let p = predicted_chromatic(s(1, 0, false), s(1, 0, false)).unwrap();
        assert_eq!(p.value, 2);
    }

    #[test]
    fn prediction_swaps_roles() {
        let a = predicted_chromatic(s(1, 0, false), s(6, 3, true)).unwrap();
        let b = predicted_chromatic(s(6, 3, true), s(1, 0, false)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn rejects_inconsistent_stats() {
        assert!(predicted_chromatic(s(2, 2, false), s(1, 0, false)).is_err());
        assert!(predicted_chromatic(s(0, 0, false), s(1, 0, false)).is_err());
    }
}
