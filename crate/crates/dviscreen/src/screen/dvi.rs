//! Screening by bounding the dual optimum in a ball.
//!
//! With `0 < C₀ ≤ C` and the dual solution at `C₀` known, `Zᵀθ*(C)` lies in
//! the ball centered at `((C₀+C)/2C)·Zᵀθ*(C₀)` with radius
//! `((C−C₀)/2C)·‖Zᵀθ*(C₀)‖`. Minimizing/maximizing the pin tests over that
//! ball gives closed-form rules: instance `i` is pinned at `α` when
//!
//! `((C+C₀)/2)·⟨Zᵀθ*(C₀), zᵢ⟩ − ((C−C₀)/2)·‖Zᵀθ*(C₀)‖·‖zᵢ‖ > ȳᵢ`
//!
//! and at `β` when the `+`-signed analogue is `< ȳᵢ`. The same rule can be
//! stated against the previous primal via `w*(C₀) = −C₀·Zᵀθ*(C₀)`; both
//! forms are provided and are algebraically identical.

use crate::problem::{dot, ProblemData};
use crate::solver::{DualSolution, PrimalSolution};
use crate::{Error, Result};

use super::{ScreeningResult, Verdict};

/// Ball known to contain `Zᵀθ*(C)`, derived from the solution at `C₀ ≤ C`.
#[derive(Debug, Clone)]
pub struct DviBall {
    pub center: Vec<f64>,
    pub radius: f64,
}

fn check_order(c_k: f64, c_next: f64) -> Result<()> {
    if !(c_k > 0.0) || c_next < c_k {
        return Err(Error::DecreasingParameter { c_k, c_next });
    }
    Ok(())
}

/// The ball containing `Zᵀθ*(C)` given `θ*(C₀)`; degenerates to radius zero
/// at `C = C₀`.
pub fn dvi_ball(problem: &ProblemData, c0: f64, c: f64, theta0: &DualSolution) -> Result<DviBall> {
    check_order(c0, c)?;
    let v0 = problem.z_transpose_theta(&theta0.theta);
    let v0_norm = dot(&v0, &v0).sqrt();
    let scale = (c0 + c) / (2.0 * c);
    let center = v0.iter().map(|&x| scale * x).collect();
    let radius = (c - c0) / (2.0 * c) * v0_norm;
    Ok(DviBall { center, radius })
}

/// Sequential rule stated on the previous dual solution `θ*(C_k)`.
pub fn screen_dual(
    problem: &ProblemData,
    c_k: f64,
    c_next: f64,
    theta_k: &DualSolution,
) -> Result<ScreeningResult> {
    check_order(c_k, c_next)?;
    let v = problem.z_transpose_theta(&theta_k.theta);
    let v_norm = dot(&v, &v).sqrt();
    let half_sum = 0.5 * (c_next + c_k);
    let half_diff = 0.5 * (c_next - c_k);
    let verdicts = (0..problem.len())
        .map(|i| {
            let inner = dot(&v, problem.z_row(i));
            let spread = half_diff * v_norm * problem.z_norm(i);
            let y = problem.ybar(i);
            if half_sum * inner - spread > y {
                Verdict::PinAlpha
            } else if half_sum * inner + spread < y {
                Verdict::PinBeta
            } else {
                Verdict::Unknown
            }
        })
        .collect();
    Ok(ScreeningResult::from_verdicts(verdicts))
}

/// Sequential rule stated on the previous primal solution `w*(C_k)`.
pub fn screen_primal(
    problem: &ProblemData,
    c_k: f64,
    c_next: f64,
    w_k: &PrimalSolution,
) -> Result<ScreeningResult> {
    check_order(c_k, c_next)?;
    let w_norm = w_k.norm();
    let half_sum = 0.5 * (c_k + c_next) / c_k;
    let half_diff = 0.5 * (c_next - c_k) / c_k;
    let verdicts = (0..problem.len())
        .map(|i| {
            let inner = dot(&w_k.w, problem.z_row(i));
            let spread = half_diff * w_norm * problem.z_norm(i);
            let y = problem.ybar(i);
            if -half_sum * inner - spread > y {
                Verdict::PinAlpha
            } else if -half_sum * inner + spread < y {
                Verdict::PinBeta
            } else {
                Verdict::Unknown
            }
        })
        .collect();
    Ok(ScreeningResult::from_verdicts(verdicts))
}
