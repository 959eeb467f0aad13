//! Dual coordinate descent for the box-constrained quadratic
//! `min (C/2)‖Zᵀθ‖² − ⟨ȳ, θ⟩  s.t.  θ ∈ [α, β]^l`,
//! primal recovery `w = −C·Zᵀθ`, and the KKT partition of instances.
//!
//! The solver never materializes the `l×l` Gram matrix. It maintains
//! `v = Zᵀθ` (length `n`), so one coordinate update costs `O(n)`:
//! the gradient coordinate is `gᵢ = C·⟨zᵢ, v⟩ − ȳᵢ` and the closed-form
//! update is `θᵢ ← clip(θᵢ − gᵢ/(C·‖zᵢ‖²), α, β)`.
//!
//! Coordinates pinned by a screening rule are fixed to their box endpoint
//! and skipped by the sweeps; this is exactly the reduced problem obtained
//! by substituting the known components, so no separate reduced solver is
//! needed. [`reduce_problem`] still materializes that reduced quadratic
//! explicitly for callers that want to inspect or cross-check it.

use crate::problem::{dot, BoxInterval, ProblemData};
use crate::{Error, Result};

/// Recompute `v = Zᵀθ` from scratch this often (in outer sweeps) to keep
/// incremental drift far below solver tolerances.
const REFRESH_SWEEPS: usize = 128;

/// Attempt an escape move along the dual null space this often.
///
/// When more than `n` coordinates sit strictly inside the box, the Gram
/// block of those rows is rank-deficient and the objective is linear along
/// its null directions. Plain coordinate descent crawls along such a
/// valley with per-visit steps bounded by the coordinate curvature
/// (observed: >10⁶ sweeps to move an O(1) distance on LAD duals). The
/// escape move projects the last sweep's displacement onto the null space
/// of the interior rows and takes one exact line-search step along it,
/// which clears the valley in a single jump. The move is deterministic and
/// never increases the objective or leaves the box.
const NULL_MOVE_SWEEPS: usize = 16;

/// Skip null-space moves when the feature dimension makes the `n×n` solve
/// disproportionate to a sweep.
const NULL_MOVE_MAX_DIM: usize = 256;

/// A dual iterate at a parameter value `C`, with convergence metadata.
#[derive(Debug, Clone)]
pub struct DualSolution {
    pub theta: Vec<f64>,
    pub c: f64,
    pub objective: f64,
    pub iterations: usize,
    pub converged: bool,
    /// Largest projected-gradient violation seen in the final sweep.
    pub max_kkt_violation: f64,
}

/// The primal weight vector recovered from a dual solution.
#[derive(Debug, Clone)]
pub struct PrimalSolution {
    pub w: Vec<f64>,
    pub c: f64,
}

impl PrimalSolution {
    pub fn norm(&self) -> f64 {
        dot(&self.w, &self.w).sqrt()
    }
}

/// Index partition induced by the KKT conditions at a primal solution:
/// `r` collects instances with `−⟨w, zᵢ⟩ > ȳᵢ` (dual coordinate at α),
/// `l` those with `−⟨w, zᵢ⟩ < ȳᵢ` (dual coordinate at β), and `e` the
/// support set in between. Ties at exact equality go to `e`.
#[derive(Debug, Clone)]
pub struct KktPartition {
    pub r: Vec<usize>,
    pub e: Vec<usize>,
    pub l: Vec<usize>,
    pub tol: f64,
}

/// Which box endpoint a pinned coordinate is fixed to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pin {
    Alpha,
    Beta,
}

impl Pin {
    pub fn value(self, interval: BoxInterval) -> f64 {
        match self {
            Pin::Alpha => interval.lo,
            Pin::Beta => interval.hi,
        }
    }
}

/// Coordinates fixed to a box endpoint before the solve; the complement is
/// the free set the solver actually iterates over.
#[derive(Debug, Clone)]
pub struct FixedAssignments {
    pins: Vec<Option<Pin>>,
}

impl FixedAssignments {
    /// No pins: the solve runs over all `l` coordinates.
    pub fn none(l: usize) -> Self {
        Self {
            pins: vec![None; l],
        }
    }

    pub fn len(&self) -> usize {
        self.pins.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pins.is_empty()
    }

    pub fn pin(&mut self, i: usize, pin: Pin) {
        self.pins[i] = Some(pin);
    }

    pub fn get(&self, i: usize) -> Option<Pin> {
        self.pins[i]
    }

    pub fn is_pinned(&self, i: usize) -> bool {
        self.pins[i].is_some()
    }

    pub fn pinned_count(&self) -> usize {
        self.pins.iter().filter(|p| p.is_some()).count()
    }

    pub fn free_indices(&self) -> Vec<usize> {
        (0..self.pins.len())
            .filter(|&i| !self.is_pinned(i))
            .collect()
    }

    /// Overwrite the pinned coordinates of `theta` with their endpoint values.
    pub fn apply(&self, theta: &mut [f64], interval: BoxInterval) {
        for (t, p) in theta.iter_mut().zip(&self.pins) {
            if let Some(pin) = p {
                *t = pin.value(interval);
            }
        }
    }
}

/// Dual objective `(C/2)‖Zᵀθ‖² − ⟨ȳ, θ⟩`, evaluated from scratch on the
/// full vector.
pub fn dual_objective(problem: &ProblemData, c: f64, theta: &[f64]) -> f64 {
    let v = problem.z_transpose_theta(theta);
    0.5 * c * dot(&v, &v) - dot(problem.ybar_all(), theta)
}

/// Primal objective `(1/2)‖w‖² + C·Σᵢ φ(⟨w, zᵢ⟩ + ȳᵢ)`.
pub fn primal_objective(problem: &ProblemData, c: f64, w: &[f64]) -> f64 {
    let loss = problem.loss();
    let data_term: f64 = (0..problem.len())
        .map(|i| loss.eval(dot(w, problem.z_row(i)) + problem.ybar(i)))
        .sum();
    0.5 * dot(w, w) + c * data_term
}

/// One exact coordinate minimization: the new value of `θᵢ` holding all
/// other coordinates of `theta` fixed.
///
/// When `‖zᵢ‖ = 0` the quadratic term vanishes and the objective is linear
/// in `θᵢ` with slope `−ȳᵢ`, so the coordinate moves to the endpoint that
/// minimizes the linear term (and stays put when `ȳᵢ = 0`).
///
/// This standalone form recomputes `Zᵀθ` and costs `O(l·n)`; the solver
/// applies the identical update against its maintained `v`.
pub fn coordinate_step(problem: &ProblemData, c: f64, theta: &[f64], i: usize) -> f64 {
    let v = problem.z_transpose_theta(theta);
    coordinate_update(problem, c, theta[i], i, &v, problem.interval())
}

#[inline]
fn coordinate_update(
    problem: &ProblemData,
    c: f64,
    theta_i: f64,
    i: usize,
    v: &[f64],
    interval: BoxInterval,
) -> f64 {
    let zn = problem.z_norm(i);
    let quad = zn * zn;
    if quad == 0.0 {
        let y = problem.ybar(i);
        return if y > 0.0 {
            interval.hi
        } else if y < 0.0 {
            interval.lo
        } else {
            theta_i
        };
    }
    let grad = c * dot(problem.z_row(i), v) - problem.ybar(i);
    interval.clamp(theta_i - grad / (c * quad))
}

/// Projected-gradient violation of coordinate `i` at value `t` with
/// gradient `g`; zero iff the coordinate satisfies its KKT condition.
#[inline]
fn projected_violation(t: f64, g: f64, interval: BoxInterval) -> f64 {
    if t <= interval.lo {
        (-g).max(0.0)
    } else if t >= interval.hi {
        g.max(0.0)
    } else {
        g.abs()
    }
}

/// Solve the SPD system `(M + ridge·I)x = b` in place by unpivoted
/// Cholesky; `m` is row-major `n×n`. Returns false if a pivot collapses.
fn cholesky_solve(m: &mut [f64], b: &mut [f64], n: usize, ridge: f64) -> bool {
    for i in 0..n {
        m[i * n + i] += ridge;
    }
    for j in 0..n {
        let mut diag = m[j * n + j];
        for k in 0..j {
            diag -= m[j * n + k] * m[j * n + k];
        }
        if diag <= 0.0 {
            return false;
        }
        let diag = diag.sqrt();
        m[j * n + j] = diag;
        for i in (j + 1)..n {
            let mut s = m[i * n + j];
            for k in 0..j {
                s -= m[i * n + k] * m[j * n + k];
            }
            m[i * n + j] = s / diag;
        }
    }
    // forward then back substitution with the lower factor
    for i in 0..n {
        let mut s = b[i];
        for k in 0..i {
            s -= m[i * n + k] * b[k];
        }
        b[i] = s / m[i * n + i];
    }
    for i in (0..n).rev() {
        let mut s = b[i];
        for k in (i + 1)..n {
            s -= m[k * n + i] * b[k];
        }
        b[i] = s / m[i * n + i];
    }
    true
}

/// One null-space escape move; returns true if the iterate moved.
///
/// `displacement` is the full-length sweep displacement; only its interior
/// coordinates participate. The candidate direction is that displacement
/// minus its best explanation by the interior rows, i.e. the component the
/// quadratic term cannot see, along which the objective is (near-)linear.
fn null_space_move(
    problem: &ProblemData,
    c: f64,
    theta: &mut [f64],
    v: &mut [f64],
    displacement: &[f64],
    free: &[usize],
    interval: BoxInterval,
) -> bool {
    let n = problem.dim();
    let interior: Vec<usize> = free
        .iter()
        .copied()
        .filter(|&i| theta[i] > interval.lo && theta[i] < interval.hi)
        .collect();
    if interior.len() <= n {
        return false;
    }
    // least-squares fit of the displacement by the interior rows:
    // (MᵀM)s = MᵀΔ with M the |interior|×n matrix of those rows
    let mut mtm = vec![0.0; n * n];
    let mut rhs = vec![0.0; n];
    for &i in &interior {
        let zi = problem.z_row(i);
        let di = displacement[i];
        for a in 0..n {
            rhs[a] += di * zi[a];
            for b in a..n {
                mtm[a * n + b] += zi[a] * zi[b];
            }
        }
    }
    for a in 0..n {
        for b in 0..a {
            mtm[a * n + b] = mtm[b * n + a];
        }
    }
    let trace: f64 = (0..n).map(|a| mtm[a * n + a]).sum();
    let ridge = 1e-12 * trace.max(1e-300);
    if !cholesky_solve(&mut mtm, &mut rhs, n, ridge) {
        return false;
    }
    // null component and its norm
    let mut direction = vec![0.0; interior.len()];
    let mut norm2 = 0.0;
    for (k, &i) in interior.iter().enumerate() {
        let fitted = dot(problem.z_row(i), &rhs);
        let d = displacement[i] - fitted;
        direction[k] = d;
        norm2 += d * d;
    }
    if norm2 <= 0.0 {
        return false;
    }
    let inv_norm = norm2.sqrt().recip();
    for d in &mut direction {
        *d *= inv_norm;
    }
    // ray data: f(θ + t·d) = f(θ) + b·t + a·t²
    let mut zd = vec![0.0; n];
    let mut lin = 0.0;
    for (k, &i) in interior.iter().enumerate() {
        let di = direction[k];
        lin += di * problem.ybar(i);
        for (zj, z) in zd.iter_mut().zip(problem.z_row(i)) {
            *zj += di * z;
        }
    }
    let mut b = c * dot(v, &zd) - lin;
    if b > 0.0 {
        for d in &mut direction {
            *d = -*d;
        }
        for z in &mut zd {
            *z = -*z;
        }
        b = -b;
    }
    if b == 0.0 {
        return false;
    }
    let a = 0.5 * c * dot(&zd, &zd);
    let mut t_edge = f64::INFINITY;
    for (k, &i) in interior.iter().enumerate() {
        let di = direction[k];
        if di > 0.0 {
            t_edge = t_edge.min((interval.hi - theta[i]) / di);
        } else if di < 0.0 {
            t_edge = t_edge.min((interval.lo - theta[i]) / di);
        }
    }
    let t_step = if a > 0.0 {
        t_edge.min(-b / (2.0 * a))
    } else {
        t_edge
    };
    if !(t_step > 0.0) || !t_step.is_finite() {
        return false;
    }
    for (k, &i) in interior.iter().enumerate() {
        theta[i] = interval.clamp(theta[i] + t_step * direction[k]);
    }
    for (vj, zj) in v.iter_mut().zip(&zd) {
        *vj += t_step * zj;
    }
    true
}

/// Solve the dual at parameter `c` by cyclic coordinate descent over the
/// free coordinates, optionally warm-started.
///
/// Pinned coordinates are set to their endpoints exactly and never touched;
/// their contribution enters through `v = Zᵀθ`. The solve stops when the
/// largest projected-gradient violation over a full sweep is at most `tol`,
/// or after `max_outer` sweeps (reported via `converged = false`, not an
/// error).
pub fn solve_dual(
    problem: &ProblemData,
    c: f64,
    warm: Option<&DualSolution>,
    fixed: &FixedAssignments,
    tol: f64,
    max_outer: usize,
) -> Result<DualSolution> {
    if !(c > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "regularization parameter must be positive, got {c}"
        )));
    }
    if fixed.len() != problem.len() {
        return Err(Error::InvalidParameter(format!(
            "fixed assignments cover {} coordinates, problem has {}",
            fixed.len(),
            problem.len()
        )));
    }
    if let Some(ws) = warm {
        if ws.theta.len() != problem.len() {
            return Err(Error::InvalidParameter(format!(
                "warm start has length {}, problem has {}",
                ws.theta.len(),
                problem.len()
            )));
        }
    }
    let interval = problem.interval();
    let mut theta: Vec<f64> = match warm {
        Some(ws) => ws.theta.iter().map(|&t| interval.clamp(t)).collect(),
        None => vec![0.0; problem.len()],
    };
    fixed.apply(&mut theta, interval);

    let free = fixed.free_indices();
    if free.is_empty() {
        let objective = dual_objective(problem, c, &theta);
        return Ok(DualSolution {
            theta,
            c,
            objective,
            iterations: 0,
            converged: true,
            max_kkt_violation: 0.0,
        });
    }

    let mut v = problem.z_transpose_theta(&theta);
    let mut sweeps = 0;
    let mut converged = false;
    let mut max_violation = f64::INFINITY;
    let try_null_moves = problem.dim() <= NULL_MOVE_MAX_DIM;
    let mut sweep_start: Vec<f64> = Vec::new();
    while sweeps < max_outer {
        sweeps += 1;
        let null_move_due = try_null_moves && sweeps % NULL_MOVE_SWEEPS == 0;
        if null_move_due {
            sweep_start.clear();
            sweep_start.extend_from_slice(&theta);
        }
        max_violation = 0.0;
        for &i in &free {
            let zn = problem.z_norm(i);
            let quad = zn * zn;
            let t = theta[i];
            let grad = if quad == 0.0 {
                -problem.ybar(i)
            } else {
                c * dot(problem.z_row(i), &v) - problem.ybar(i)
            };
            let viol = projected_violation(t, grad, interval);
            if viol > max_violation {
                max_violation = viol;
            }
            let t_new = if quad == 0.0 {
                let y = problem.ybar(i);
                if y > 0.0 {
                    interval.hi
                } else if y < 0.0 {
                    interval.lo
                } else {
                    t
                }
            } else {
                interval.clamp(t - grad / (c * quad))
            };
            let delta = t_new - t;
            if delta != 0.0 {
                theta[i] = t_new;
                for (vj, zj) in v.iter_mut().zip(problem.z_row(i)) {
                    *vj += delta * zj;
                }
            }
        }
        if max_violation <= tol {
            converged = true;
            break;
        }
        if null_move_due {
            for (d, t) in sweep_start.iter_mut().zip(&theta) {
                *d = t - *d;
            }
            null_space_move(
                problem,
                c,
                &mut theta,
                &mut v,
                &sweep_start,
                &free,
                interval,
            );
        }
        if sweeps % REFRESH_SWEEPS == 0 {
            v = problem.z_transpose_theta(&theta);
        }
    }

    let objective = dual_objective(problem, c, &theta);
    Ok(DualSolution {
        theta,
        c,
        objective,
        iterations: sweeps,
        converged,
        max_kkt_violation: max_violation,
    })
}

/// Recover the primal solution `w = −C·Zᵀθ` paired with a dual iterate.
pub fn primal_from_dual(problem: &ProblemData, dual: &DualSolution) -> PrimalSolution {
    let mut w = problem.z_transpose_theta(&dual.theta);
    for wj in &mut w {
        *wj = -dual.c * *wj;
    }
    PrimalSolution { w, c: dual.c }
}

/// Partition instances by the KKT conditions at `w`, with ties within
/// `tol` of equality assigned to the support set `e`.
pub fn kkt_partition(problem: &ProblemData, primal: &PrimalSolution, tol: f64) -> KktPartition {
    let mut r = Vec::new();
    let mut e = Vec::new();
    let mut l = Vec::new();
    for i in 0..problem.len() {
        let margin = -dot(&primal.w, problem.z_row(i));
        let y = problem.ybar(i);
        if margin > y + tol {
            r.push(i);
        } else if margin < y - tol {
            l.push(i);
        } else {
            e.push(i);
        }
    }
    KktPartition { r, e, l, tol }
}

/// The reduced quadratic over the free coordinates after substituting the
/// pinned ones: free-index map plus the adjusted linear term
/// `ŷ = ȳ_free − C·Ĝ₁₂·θ_pinned`.
#[derive(Debug, Clone)]
pub struct ReducedProblem {
    pub free: Vec<usize>,
    pub y_hat: Vec<f64>,
}

impl ReducedProblem {
    /// Materialize the reduced quadratic as a standalone box QP on the free
    /// rows. Its `ybar` carries the adjusted linear term `ŷ`, not `bᵢyᵢ`,
    /// so solving it and re-inserting the pinned values reproduces the full
    /// optimum.
    pub fn to_problem(&self, parent: &ProblemData) -> ProblemData {
        let n = parent.dim();
        let mut z = Vec::with_capacity(self.free.len() * n);
        for &i in &self.free {
            z.extend_from_slice(parent.z_row(i));
        }
        ProblemData::from_transformed(z, self.y_hat.clone(), parent.loss(), n)
    }

    /// Scatter a reduced solution back into a full-length vector whose
    /// pinned coordinates hold their endpoint values.
    pub fn insert(
        &self,
        reduced_theta: &[f64],
        fixed: &FixedAssignments,
        interval: BoxInterval,
    ) -> Vec<f64> {
        debug_assert_eq!(reduced_theta.len(), self.free.len());
        let mut theta = vec![0.0; fixed.len()];
        fixed.apply(&mut theta, interval);
        for (&i, &t) in self.free.iter().zip(reduced_theta) {
            theta[i] = t;
        }
        theta
    }
}

/// Substitute the pinned coordinates into the dual and return the problem
/// over the free ones.
pub fn reduce_problem(problem: &ProblemData, fixed: &FixedAssignments, c: f64) -> ReducedProblem {
    let interval = problem.interval();
    let mut pinned_theta = vec![0.0; problem.len()];
    for i in 0..problem.len() {
        if let Some(pin) = fixed.get(i) {
            pinned_theta[i] = pin.value(interval);
        }
    }
    // Ĝ₁₂·θ_pinned without forming the Gram matrix: project the pinned
    // combination once, then dot each free row against it.
    let v_pinned = problem.z_transpose_theta(&pinned_theta);
    let free = fixed.free_indices();
    let y_hat = free
        .iter()
        .map(|&i| problem.ybar(i) - c * dot(problem.z_row(i), &v_pinned))
        .collect();
    ReducedProblem { free, y_hat }
}
