//! Linear optimization over a "dome": the intersection of a half-space
//! `uᵀw ≤ d` with a ball `‖w − o‖ ≤ r`.
//!
//! Both SSNSV-family rules reduce to this single primitive. The minimum of
//! `vᵀw` over the dome has a closed form with two cases, depending on
//! whether the unconstrained ball minimizer `o − r·v/‖v‖` satisfies the
//! half-space: writing `d' = d − uᵀo`,
//!
//! * if `vᵀu + ‖v‖·d'/r ≥ 0` the half-space is inactive and
//!   `min = vᵀo − r‖v‖`;
//! * otherwise the minimizer sits on the boundary circle and
//!   `min = vᵀo − ‖v⊥‖·√(r² − d'²/‖u‖²) + (vᵀu)·d'/‖u‖²` with
//!   `v⊥ = v − (vᵀu/‖u‖²)·u`.
//!
//! `u = 0` is the pure-ball case (the half-space is vacuous, case 1).

use crate::problem::{dot, norm};
use crate::{Error, Result};

/// Relative slack admitted by the feasibility check so regions produced
/// from solved-but-inexact path states are not rejected for roundoff.
const FEASIBILITY_SLACK: f64 = 1e-9;

/// Half-space `uᵀw ≤ d` intersected with ball `‖w − o‖ ≤ r`, `r > 0`.
///
/// Construction verifies the boundary plane actually meets the ball
/// (`|uᵀo − d| ≤ r‖u‖`, up to roundoff slack), so the region is a genuine
/// dome; with `u = 0` it is the whole ball and only `d ≥ 0` is required.
#[derive(Debug, Clone)]
pub struct DomeRegion {
    u: Vec<f64>,
    d: f64,
    o: Vec<f64>,
    r: f64,
}

impl DomeRegion {
    pub fn new(u: Vec<f64>, d: f64, o: Vec<f64>, r: f64) -> Result<Self> {
        if !(r > 0.0) || !r.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "dome radius must be positive and finite, got {r}"
            )));
        }
        if u.len() != o.len() {
            return Err(Error::InvalidParameter(format!(
                "dome normal has dimension {}, center has {}",
                u.len(),
                o.len()
            )));
        }
        let u_norm = norm(&u);
        if u_norm == 0.0 {
            if d < 0.0 {
                return Err(Error::InfeasibleRegion {
                    gap: -d,
                    limit: 0.0,
                });
            }
        } else {
            let gap = (dot(&u, &o) - d).abs();
            let limit = r * u_norm;
            if gap > limit * (1.0 + FEASIBILITY_SLACK) + f64::MIN_POSITIVE {
                return Err(Error::InfeasibleRegion { gap, limit });
            }
        }
        Ok(Self { u, d, o, r })
    }

    pub fn u(&self) -> &[f64] {
        &self.u
    }

    pub fn d(&self) -> f64 {
        self.d
    }

    pub fn o(&self) -> &[f64] {
        &self.o
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    /// Membership test, used by sampling-based checks.
    pub fn contains(&self, w: &[f64], slack: f64) -> bool {
        let dist2: f64 = w.iter().zip(&self.o).map(|(a, b)| (a - b) * (a - b)).sum();
        dot(&self.u, w) <= self.d + slack && dist2.sqrt() <= self.r + slack
    }
}

/// Minimum of `vᵀw` over the dome.
pub fn dome_min(v: &[f64], region: &DomeRegion) -> f64 {
    let v_norm = norm(v);
    let vo = dot(v, region.o());
    let u_norm2 = dot(region.u(), region.u());
    if u_norm2 == 0.0 {
        return vo - region.r() * v_norm;
    }
    let d_prime = region.d() - dot(region.u(), region.o());
    let vu = dot(v, region.u());
    if vu + v_norm * d_prime / region.r() >= 0.0 {
        vo - region.r() * v_norm
    } else {
        // ‖v⊥‖² = ‖v‖² − (vᵀu)²/‖u‖², clamped against cancellation
        let v_perp = (v_norm * v_norm - vu * vu / u_norm2).max(0.0).sqrt();
        let chord = (region.r() * region.r() - d_prime * d_prime / u_norm2)
            .max(0.0)
            .sqrt();
        vo - v_perp * chord + vu * d_prime / u_norm2
    }
}

/// Maximum of `vᵀw` over the dome: `−min(−vᵀw)`.
pub fn dome_max(v: &[f64], region: &DomeRegion) -> f64 {
    let neg: Vec<f64> = v.iter().map(|x| -x).collect();
    -dome_min(&neg, region)
}
