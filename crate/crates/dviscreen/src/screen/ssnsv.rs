//! The prior SSNSV rule and its variational-inequality-tightened variant
//! ESSNSV, for the hinge loss only.
//!
//! Both rules run on the slack-constrained reformulation of the SVM:
//! minimize `‖w‖²/2` subject to `Σᵢ[1 − ⟨w, x̄ᵢ⟩]₊ ≤ s`, with `x̄ᵢ = yᵢxᵢ`.
//! Given the optimal `w*(s_a)` and a point `ŵ(s_b)` feasible at `s_b < s_a`,
//! the optimum `w*(s)` for any `s ∈ [s_b, s_a]` lies in
//!
//! * SSNSV region: `{ ⟨w*(s_a), w − w*(s_a)⟩ ≥ 0 } ∩ { ‖w‖ ≤ ‖ŵ(s_b)‖ }`;
//! * ESSNSV region: same half-space ∩ `{ ‖w − ½ŵ(s_b)‖ ≤ ½‖ŵ(s_b)‖ }`.
//!
//! The ESSNSV ball has half the radius and is contained in the SSNSV ball,
//! so every SSNSV pin is also an ESSNSV pin. Instance `i` is pinned at α
//! when the dome minimum of `⟨w, x̄ᵢ⟩` exceeds 1, and at β when the dome
//! maximum is below 1. For ESSNSV the two-case closed forms (`ℓᵢ`, `uᵢ`)
//! are evaluated directly; they are the dome formulas specialized to the
//! region above with `ρ = −‖w*(s_a)‖² + ½⟨w*(s_a), ŵ(s_b)⟩`.

use crate::problem::{dot, Loss, ProblemData};
use crate::{Error, Result};

use super::dome::{dome_max, dome_min, DomeRegion};
use super::{ScreeningResult, Verdict};

/// Abstain from screening when the half-space is this close to grazing the
/// containment ball (chord radius relative to ball radius).
///
/// Once a path saturates, `w*(s_a)`, `ŵ(s_b)` and the target solution all
/// coincide up to solver tolerance and the region collapses toward a single
/// point. Every support vector's margin then sits exactly on the pin
/// threshold and the strict comparisons are decided by roundoff, which is
/// how unsafe pins happen. A collapsed region certifies nothing anyway, so
/// both rules emit all-unknown below this width.
const DEGENERATE_WIDTH: f64 = 1e-3;

/// State driving one SSNSV/ESSNSV screening step: the optimal solution at
/// the looser slack level `s_a`, a feasible point at the tighter level
/// `s_b`, and the precomputed offset `ρ`.
#[derive(Debug, Clone)]
pub struct SPathState {
    pub w_sa: Vec<f64>,
    pub w_hat_sb: Vec<f64>,
    pub rho: f64,
    pub s_a: f64,
    pub s_b: f64,
}

impl SPathState {
    /// Build the state from two primal vectors; slack levels are computed
    /// from the data, so `slack(ŵ(s_b)) ≤ s_b` holds by construction.
    pub fn new(problem: &ProblemData, w_sa: Vec<f64>, w_hat_sb: Vec<f64>) -> Result<Self> {
        if w_sa.len() != problem.dim() || w_hat_sb.len() != problem.dim() {
            return Err(Error::InvalidParameter(
                "path state vectors must match the problem dimension".into(),
            ));
        }
        let s_a = slack_of(problem, &w_sa)?;
        let s_b = slack_of(problem, &w_hat_sb)?;
        let rho = -dot(&w_sa, &w_sa) + 0.5 * dot(&w_sa, &w_hat_sb);
        Ok(Self {
            w_sa,
            w_hat_sb,
            rho,
            s_a,
            s_b,
        })
    }
}

/// Total hinge slack `Σᵢ [1 − yᵢ⟨w, xᵢ⟩]₊` of `w` on the dataset.
pub fn slack_of(problem: &ProblemData, w: &[f64]) -> Result<f64> {
    if problem.loss() != Loss::Hinge {
        return Err(Error::HingeOnly { rule: "slack_of" });
    }
    // x̄ᵢ = −zᵢ under the hinge transform, so 1 − ⟨w, x̄ᵢ⟩ = 1 + ⟨w, zᵢ⟩
    Ok((0..problem.len())
        .map(|i| (1.0 + dot(w, problem.z_row(i))).max(0.0))
        .sum())
}

/// The SSNSV containment region (half-space ∩ origin-centered ball).
///
/// With exact inputs `‖w*(s_a)‖ ≤ ‖ŵ(s_b)‖`, so the ball reaches the
/// half-space boundary. Solver-tolerance noise can invert the norms by an
/// epsilon near the end of a path, which would make the region look
/// empty; the radius is enlarged to cover `w*(s_a)` in that case.
/// Enlarging a containment region only weakens the rule, never its safety.
pub fn region_ssnsv(state: &SPathState) -> Result<DomeRegion> {
    let what_norm = dot(&state.w_hat_sb, &state.w_hat_sb).sqrt();
    let wsa_norm = dot(&state.w_sa, &state.w_sa).sqrt();
    let u: Vec<f64> = state.w_sa.iter().map(|x| -x).collect();
    let d = -dot(&state.w_sa, &state.w_sa);
    DomeRegion::new(u, d, vec![0.0; state.w_sa.len()], what_norm.max(wsa_norm))
}

/// The ESSNSV containment region (same half-space ∩ half-radius ball
/// centered at `½ŵ(s_b)`). The radius is enlarged by the same epsilon
/// rule as [`region_ssnsv`] when inexact inputs leave `ρ` outside the
/// exact ball's reach.
pub fn region_essnsv(state: &SPathState) -> Result<DomeRegion> {
    let what_norm = dot(&state.w_hat_sb, &state.w_hat_sb).sqrt();
    let wsa_norm = dot(&state.w_sa, &state.w_sa).sqrt();
    let u: Vec<f64> = state.w_sa.iter().map(|x| -x).collect();
    let d = -dot(&state.w_sa, &state.w_sa);
    let o: Vec<f64> = state.w_hat_sb.iter().map(|x| 0.5 * x).collect();
    let mut r = 0.5 * what_norm;
    if wsa_norm > 0.0 {
        r = r.max(state.rho.abs() / wsa_norm);
    }
    DomeRegion::new(u, d, o, r)
}

/// Screen with the SSNSV region.
pub fn ssnsv_screen(problem: &ProblemData, state: &SPathState) -> Result<ScreeningResult> {
    if problem.loss() != Loss::Hinge {
        return Err(Error::HingeOnly { rule: "ssnsv" });
    }
    let region = region_ssnsv(state)?;
    // chord of the ball cut by the half-space boundary
    let wsa_norm2 = dot(&state.w_sa, &state.w_sa);
    let chord2 = region.r() * region.r() - wsa_norm2;
    if chord2.max(0.0).sqrt() <= DEGENERATE_WIDTH * region.r() {
        return Ok(ScreeningResult::all_unknown(problem.len()));
    }
    let verdicts = (0..problem.len())
        .map(|i| {
            let xbar: Vec<f64> = problem.z_row(i).iter().map(|x| -x).collect();
            if dome_min(&xbar, &region) > 1.0 {
                Verdict::PinAlpha
            } else if dome_max(&xbar, &region) < 1.0 {
                Verdict::PinBeta
            } else {
                Verdict::Unknown
            }
        })
        .collect();
    Ok(ScreeningResult::from_verdicts(verdicts))
}

/// Closed-form lower and upper bounds `(ℓᵢ, uᵢ)` of `⟨w, x̄ᵢ⟩` over the
/// ESSNSV region, without going through the generic dome evaluation.
pub fn essnsv_bounds(state: &SPathState, xbar: &[f64]) -> Result<(f64, f64)> {
    let wsa_norm2 = dot(&state.w_sa, &state.w_sa);
    if wsa_norm2 == 0.0 {
        return Err(Error::ZeroReferenceSolution);
    }
    let what_norm = dot(&state.w_hat_sb, &state.w_hat_sb).sqrt();
    if what_norm == 0.0 {
        return Err(Error::InvalidParameter(
            "feasible point at s_b has zero norm; the containment ball is degenerate".into(),
        ));
    }
    let rho = state.rho;
    // √(¼‖ŵ‖² − ρ²/‖w*(s_a)‖²); nonnegative when the region is nonempty,
    // clamped against roundoff
    let chord = (0.25 * what_norm * what_norm - rho * rho / wsa_norm2)
        .max(0.0)
        .sqrt();
    let a = dot(&state.w_sa, xbar);
    let h = dot(&state.w_hat_sb, xbar);
    let xb_norm = dot(xbar, xbar).sqrt();
    let perp = (xb_norm * xb_norm - a * a / wsa_norm2).max(0.0).sqrt();
    let threshold = 2.0 * xb_norm / what_norm * rho;

    let lower = if a <= threshold {
        // half-space inactive for the minimization
        0.5 * (h - what_norm * xb_norm)
    } else {
        -a / wsa_norm2 * rho + 0.5 * h - perp * chord
    };
    let upper = if a >= -threshold {
        0.5 * (h + what_norm * xb_norm)
    } else {
        -a / wsa_norm2 * rho + 0.5 * h + perp * chord
    };
    Ok((lower, upper))
}

/// Screen with the ESSNSV region via the closed-form bounds.
pub fn essnsv_screen(problem: &ProblemData, state: &SPathState) -> Result<ScreeningResult> {
    if problem.loss() != Loss::Hinge {
        return Err(Error::HingeOnly { rule: "essnsv" });
    }
    let wsa_norm2 = dot(&state.w_sa, &state.w_sa);
    if wsa_norm2 == 0.0 {
        return Err(Error::ZeroReferenceSolution);
    }
    let what_norm = dot(&state.w_hat_sb, &state.w_hat_sb).sqrt();
    let chord2 = 0.25 * what_norm * what_norm - state.rho * state.rho / wsa_norm2;
    if chord2.max(0.0).sqrt() <= DEGENERATE_WIDTH * 0.5 * what_norm {
        return Ok(ScreeningResult::all_unknown(problem.len()));
    }
    let mut verdicts = Vec::with_capacity(problem.len());
    for i in 0..problem.len() {
        let xbar: Vec<f64> = problem.z_row(i).iter().map(|x| -x).collect();
        let (lower, upper) = essnsv_bounds(state, &xbar)?;
        verdicts.push(if lower > 1.0 {
            Verdict::PinAlpha
        } else if upper < 1.0 {
            Verdict::PinBeta
        } else {
            Verdict::Unknown
        });
    }
    Ok(ScreeningResult::from_verdicts(verdicts))
}
