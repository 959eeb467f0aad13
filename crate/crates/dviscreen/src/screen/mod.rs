//! Safe screening rules.
//!
//! A rule inspects a solved parameter value and emits one verdict per
//! instance for a target parameter value: pinned at `α`, pinned at `β`, or
//! unknown. Safety means a pin is only emitted when the instance is provably
//! a non-support vector at the target, so discarding it cannot change the
//! solution. All comparisons are strict floating-point inequalities with no
//! slack in either direction.

pub mod dome;
pub mod dvi;
pub mod ssnsv;

use serde::{Deserialize, Serialize};

use crate::problem::BoxInterval;
use crate::solver::{FixedAssignments, Pin};

/// Per-instance screening outcome.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    /// Dual coordinate provably equals `α`; the instance is in `R`.
    PinAlpha,
    /// Dual coordinate provably equals `β`; the instance is in `L`.
    PinBeta,
    /// Not screened; the coordinate stays in the solve.
    Unknown,
}

/// Verdicts for a whole dataset plus pin counts.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScreeningResult {
    pub verdicts: Vec<Verdict>,
    pub n_alpha: usize,
    pub n_beta: usize,
}

impl ScreeningResult {
    pub fn from_verdicts(verdicts: Vec<Verdict>) -> Self {
        let n_alpha = verdicts.iter().filter(|v| **v == Verdict::PinAlpha).count();
        let n_beta = verdicts.iter().filter(|v| **v == Verdict::PinBeta).count();
        Self {
            verdicts,
            n_alpha,
            n_beta,
        }
    }

    /// A result that pins nothing (the no-screening baseline).
    pub fn all_unknown(l: usize) -> Self {
        Self {
            verdicts: vec![Verdict::Unknown; l],
            n_alpha: 0,
            n_beta: 0,
        }
    }

    pub fn len(&self) -> usize {
        self.verdicts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.verdicts.is_empty()
    }

    /// Fraction of instances pinned: `(|R̃| + |L̃|) / l`.
    pub fn rejection_ratio(&self) -> f64 {
        if self.verdicts.is_empty() {
            0.0
        } else {
            (self.n_alpha + self.n_beta) as f64 / self.verdicts.len() as f64
        }
    }

    /// Convert the pins into solver fixed assignments.
    pub fn to_fixed(&self) -> FixedAssignments {
        let mut fixed = FixedAssignments::none(self.verdicts.len());
        for (i, v) in self.verdicts.iter().enumerate() {
            match v {
                Verdict::PinAlpha => fixed.pin(i, Pin::Alpha),
                Verdict::PinBeta => fixed.pin(i, Pin::Beta),
                Verdict::Unknown => {}
            }
        }
        fixed
    }

    /// True when every pin in `other` is also pinned here (same endpoint).
    pub fn dominates(&self, other: &ScreeningResult) -> bool {
        self.verdicts
            .iter()
            .zip(&other.verdicts)
            .all(|(mine, theirs)| *theirs == Verdict::Unknown || mine == theirs)
    }

    /// Pinned value of instance `i`, if any.
    pub fn pinned_value(&self, i: usize, interval: BoxInterval) -> Option<f64> {
        match self.verdicts[i] {
            Verdict::PinAlpha => Some(interval.lo),
            Verdict::PinBeta => Some(interval.hi),
            Verdict::Unknown => None,
        }
    }
}
