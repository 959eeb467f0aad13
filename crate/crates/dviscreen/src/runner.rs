//! Regularization-path execution: parameter grids, sequential screening
//! with warm starts, the safety oracle, method comparison, and report
//! emission.
//!
//! A path run solves the first grid point without screening (the "init"
//! solve), then walks the grid in increasing order. At each subsequent
//! point the chosen rule screens against the previous solution, the pinned
//! coordinates are fixed, and the reduced problem is solved warm-started
//! from the previous iterate. With verification enabled, every point is
//! additionally solved unscreened at a much tighter tolerance and each pin
//! is checked against that reference; a passing run reports zero
//! violations.
//!
//! Timing totals count what the method actually costs (init, screening,
//! reduced solves) and exclude verification work.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::problem::{dot, Loss, ProblemData};
use crate::screen::dvi::{screen_dual, screen_primal};
use crate::screen::ssnsv::{essnsv_screen, ssnsv_screen, SPathState};
use crate::screen::{ScreeningResult, Verdict};
use crate::solver::{primal_from_dual, solve_dual, DualSolution, FixedAssignments};
use crate::{Error, Result};

/// Monotonic stopwatch; reads zero on wasm targets, where the host clock
/// is unavailable and timing fields are informational only.
struct Stopwatch {
    #[cfg(not(target_arch = "wasm32"))]
    started: std::time::Instant,
}

impl Stopwatch {
    fn start() -> Self {
        Self {
            #[cfg(not(target_arch = "wasm32"))]
            started: std::time::Instant::now(),
        }
    }

    fn elapsed_s(&self) -> f64 {
        #[cfg(not(target_arch = "wasm32"))]
        {
            self.started.elapsed().as_secs_f64()
        }
        #[cfg(target_arch = "wasm32")]
        {
            0.0
        }
    }
}

/// How a grid was constructed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum GridScale {
    Log,
    Linear,
    Explicit,
}

/// Strictly increasing sequence of positive parameter values.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PathGrid {
    values: Vec<f64>,
    scale: GridScale,
}

impl PathGrid {
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn scale(&self) -> GridScale {
        self.scale
    }

    /// Grid from explicit values; they must be positive and strictly
    /// increasing.
    pub fn explicit(values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidParameter("grid must be nonempty".into()));
        }
        if values[0] <= 0.0 || !values[0].is_finite() {
            return Err(Error::InvalidParameter(
                "grid values must be positive and finite".into(),
            ));
        }
        for pair in values.windows(2) {
            if !(pair[1] > pair[0]) || !pair[1].is_finite() {
                return Err(Error::InvalidParameter(
                    "grid values must be strictly increasing".into(),
                ));
            }
        }
        Ok(Self {
            values,
            scale: GridScale::Explicit,
        })
    }
}

/// `k` values from `c_min` to `c_max`, equally spaced on a log scale:
/// `values[j] = c_min · (c_max/c_min)^(j/(k−1))`.
pub fn log_grid(c_min: f64, c_max: f64, k: usize) -> Result<PathGrid> {
    if !(c_min > 0.0) || !(c_max > c_min) || !c_max.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "log grid needs 0 < c_min < c_max, got [{c_min}, {c_max}]"
        )));
    }
    if k < 2 {
        return Err(Error::InvalidParameter(format!(
            "log grid needs at least 2 points, got {k}"
        )));
    }
    let ratio = c_max / c_min;
    let mut values: Vec<f64> = (0..k)
        .map(|j| c_min * ratio.powf(j as f64 / (k - 1) as f64))
        .collect();
    // pin the endpoints exactly
    values[0] = c_min;
    values[k - 1] = c_max;
    Ok(PathGrid {
        values,
        scale: GridScale::Log,
    })
}

/// `k` values from `c_min` to `c_max`, equally spaced linearly.
pub fn linear_grid(c_min: f64, c_max: f64, k: usize) -> Result<PathGrid> {
    if !(c_min > 0.0) || !(c_max > c_min) || !c_max.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "linear grid needs 0 < c_min < c_max, got [{c_min}, {c_max}]"
        )));
    }
    if k < 2 {
        return Err(Error::InvalidParameter(format!(
            "linear grid needs at least 2 points, got {k}"
        )));
    }
    let step = (c_max - c_min) / (k - 1) as f64;
    let mut values: Vec<f64> = (0..k).map(|j| c_min + step * j as f64).collect();
    values[0] = c_min;
    values[k - 1] = c_max;
    Ok(PathGrid {
        values,
        scale: GridScale::Linear,
    })
}

/// Screening method applied along the path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Method {
    /// No screening; the warm-started baseline solver.
    None,
    /// Ball rule stated on the previous dual solution.
    DviDual,
    /// Ball rule stated on the previous primal solution.
    DviPrimal,
    /// Prior dome rule (full-radius ball), hinge only.
    Ssnsv,
    /// Tightened dome rule (half-radius ball), hinge only.
    Essnsv,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::None => "none",
            Method::DviDual => "dvi-dual",
            Method::DviPrimal => "dvi-primal",
            Method::Ssnsv => "ssnsv",
            Method::Essnsv => "essnsv",
        }
    }

    pub fn needs_hinge(self) -> bool {
        matches!(self, Method::Ssnsv | Method::Essnsv)
    }

    pub const ALL: [Method; 5] = [
        Method::None,
        Method::DviDual,
        Method::DviPrimal,
        Method::Ssnsv,
        Method::Essnsv,
    ];
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "none" => Ok(Method::None),
            "dvi-dual" => Ok(Method::DviDual),
            "dvi-primal" => Ok(Method::DviPrimal),
            "ssnsv" => Ok(Method::Ssnsv),
            "essnsv" => Ok(Method::Essnsv),
            other => Err(Error::InvalidParameter(format!(
                "unknown method '{other}' (expected none|dvi-dual|dvi-primal|ssnsv|essnsv)"
            ))),
        }
    }
}

/// Tolerances and switches for a path run.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct RunOptions {
    /// Production solver tolerance (max projected-gradient violation).
    pub tol: f64,
    /// Tolerance of the unscreened reference solves in verify mode.
    pub oracle_tol: f64,
    /// How close a pinned coordinate must be to its endpoint in the
    /// reference solution before it counts as a violation.
    pub pin_tol: f64,
    /// Solve an unscreened reference at every point and check each pin.
    pub verify: bool,
    /// Outer-sweep budget per solve.
    pub max_outer: usize,
}

impl Default for RunOptions {
    fn default() -> Self {
        Self {
            tol: 1e-6,
            oracle_tol: 1e-10,
            pin_tol: 1e-6,
            verify: false,
            max_outer: 200_000,
        }
    }
}

/// Per-grid-point record of a path run.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PathPoint {
    pub c: f64,
    pub rejection_ratio: f64,
    pub n_alpha: usize,
    pub n_beta: usize,
    pub solver_iterations: usize,
    /// Screening plus solve time for this point, seconds.
    pub wall_time_s: f64,
    pub converged: bool,
    /// Pins contradicted by the reference solve (verify mode; else 0).
    pub safety_violations: usize,
    /// Relative L2 distance between the run's `w` and the reference `w`
    /// (verify mode; else 0).
    pub w_divergence: f64,
}

/// Whole-run totals.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PathTotals {
    /// Init + screening + solves, seconds; excludes verification work.
    pub total_time_s: f64,
    /// Unscreened solve(s) required before screening can start.
    pub init_time_s: f64,
    pub screen_time_s: f64,
    pub safety_violations: usize,
    /// Total of the no-screening baseline, when one was run alongside.
    pub baseline_time_s: Option<f64>,
    /// `baseline_time_s / total_time_s`, when a baseline was run.
    pub speedup: Option<f64>,
}

/// Report of one path run; the JSON form of this struct is the on-disk
/// schema (`schema_version` 1).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PathReport {
    pub schema_version: u32,
    pub method: String,
    pub loss: String,
    pub points: Vec<PathPoint>,
    pub totals: PathTotals,
}

pub const REPORT_SCHEMA_VERSION: u32 = 1;

/// A pin contradicted by the reference solution.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Violation {
    pub index: usize,
    pub verdict: Verdict,
    pub theta_exact: f64,
}

/// Check every pin against a reference dual solution solved at the target
/// parameter: a `PinAlpha` (`PinBeta`) whose reference coordinate is more
/// than `pin_tol` away from `α` (`β`) is a violation.
pub fn verify_safety(
    problem: &ProblemData,
    verdicts: &ScreeningResult,
    exact: &DualSolution,
    pin_tol: f64,
) -> Vec<Violation> {
    let interval = problem.interval();
    let mut violations = Vec::new();
    for (i, v) in verdicts.verdicts.iter().enumerate() {
        let target = match v {
            Verdict::PinAlpha => interval.lo,
            Verdict::PinBeta => interval.hi,
            Verdict::Unknown => continue,
        };
        if (exact.theta[i] - target).abs() > pin_tol {
            violations.push(Violation {
                index: i,
                verdict: *v,
                theta_exact: exact.theta[i],
            });
        }
    }
    violations
}

fn rel_l2(a: &[f64], b: &[f64]) -> f64 {
    let diff: f64 = a
        .iter()
        .zip(b)
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt();
    let scale = dot(b, b).sqrt();
    diff / scale.max(1e-12)
}

fn screen_at(
    problem: &ProblemData,
    method: Method,
    c_prev: f64,
    c: f64,
    prev: &DualSolution,
    ssnsv_anchor: Option<&Vec<f64>>,
) -> Result<ScreeningResult> {
    match method {
        Method::None => Ok(ScreeningResult::all_unknown(problem.len())),
        Method::DviDual => screen_dual(problem, c_prev, c, prev),
        Method::DviPrimal => {
            let w = primal_from_dual(problem, prev);
            screen_primal(problem, c_prev, c, &w)
        }
        Method::Ssnsv | Method::Essnsv => {
            let anchor = ssnsv_anchor.expect("anchor solved during init");
            let w_prev = primal_from_dual(problem, prev).w;
            let state = SPathState::new(problem, w_prev, anchor.clone())?;
            if method == Method::Ssnsv {
                ssnsv_screen(problem, &state)
            } else {
                essnsv_screen(problem, &state)
            }
        }
    }
}

/// Run one method over the grid. See the module docs for the protocol.
pub fn run_path(
    problem: &ProblemData,
    grid: &PathGrid,
    method: Method,
    opts: &RunOptions,
) -> Result<PathReport> {
    if method.needs_hinge() && problem.loss() != Loss::Hinge {
        return Err(Error::MethodLossMismatch {
            method: method.name().into(),
            loss: problem.loss().name().into(),
        });
    }
    let l = problem.len();
    let no_pins = FixedAssignments::none(l);
    let c_values = grid.values();
    let mut points = Vec::with_capacity(c_values.len());

    // init: unscreened solve at the smallest parameter value
    let t_init = Stopwatch::start();
    let mut current = solve_dual(
        problem,
        c_values[0],
        None,
        &no_pins,
        opts.tol,
        opts.max_outer,
    )?;
    let mut init_time = t_init.elapsed_s();

    // the dome rules also need the solution at the largest value up front
    let ssnsv_anchor = if method.needs_hinge() {
        let t = Stopwatch::start();
        let sol_max = solve_dual(
            problem,
            c_values[c_values.len() - 1],
            None,
            &no_pins,
            opts.tol,
            opts.max_outer,
        )?;
        init_time += t.elapsed_s();
        Some(primal_from_dual(problem, &sol_max).w)
    } else {
        None
    };

    let mut oracle = if opts.verify {
        Some(solve_dual(
            problem,
            c_values[0],
            None,
            &no_pins,
            opts.oracle_tol,
            opts.max_outer,
        )?)
    } else {
        None
    };

    let first_divergence = oracle
        .as_ref()
        .map(|o| {
            rel_l2(
                &primal_from_dual(problem, &current).w,
                &primal_from_dual(problem, o).w,
            )
        })
        .unwrap_or(0.0);
    points.push(PathPoint {
        c: c_values[0],
        rejection_ratio: 0.0,
        n_alpha: 0,
        n_beta: 0,
        solver_iterations: current.iterations,
        wall_time_s: init_time,
        converged: current.converged,
        safety_violations: 0,
        w_divergence: first_divergence,
    });

    let mut screen_total = 0.0;
    let mut violations_total = 0;
    for k in 1..c_values.len() {
        let (c_prev, c) = (c_values[k - 1], c_values[k]);

        let t_screen = Stopwatch::start();
        let screening = screen_at(problem, method, c_prev, c, &current, ssnsv_anchor.as_ref())?;
        let fixed = screening.to_fixed();
        let screen_time = t_screen.elapsed_s();
        screen_total += screen_time;

        let t_solve = Stopwatch::start();
        let next = solve_dual(problem, c, Some(&current), &fixed, opts.tol, opts.max_outer)?;
        let solve_time = t_solve.elapsed_s();

        let (safety_violations, w_divergence) = if let Some(prev_oracle) = oracle.take() {
            let reference = solve_dual(
                problem,
                c,
                Some(&prev_oracle),
                &no_pins,
                opts.oracle_tol,
                opts.max_outer,
            )?;
            let violations = verify_safety(problem, &screening, &reference, opts.pin_tol);
            let div = rel_l2(
                &primal_from_dual(problem, &next).w,
                &primal_from_dual(problem, &reference).w,
            );
            oracle = Some(reference);
            (violations.len(), div)
        } else {
            (0, 0.0)
        };
        violations_total += safety_violations;

        points.push(PathPoint {
            c,
            rejection_ratio: screening.rejection_ratio(),
            n_alpha: screening.n_alpha,
            n_beta: screening.n_beta,
            solver_iterations: next.iterations,
            wall_time_s: screen_time + solve_time,
            converged: next.converged,
            safety_violations,
            w_divergence,
        });
        current = next;
    }

    let total_time_s = points.iter().map(|p| p.wall_time_s).sum();
    Ok(PathReport {
        schema_version: REPORT_SCHEMA_VERSION,
        method: method.name().into(),
        loss: problem.loss().name().into(),
        points,
        totals: PathTotals {
            total_time_s,
            init_time_s: init_time,
            screen_time_s: screen_total,
            safety_violations: violations_total,
            baseline_time_s: None,
            speedup: None,
        },
    })
}

/// Run a screening method and the no-screening baseline on the same grid,
/// recording the baseline total and the resulting speedup in the report.
pub fn run_path_with_baseline(
    problem: &ProblemData,
    grid: &PathGrid,
    method: Method,
    opts: &RunOptions,
) -> Result<PathReport> {
    let baseline = run_path(problem, grid, Method::None, opts)?;
    let mut report = run_path(problem, grid, method, opts)?;
    report.totals.baseline_time_s = Some(baseline.totals.total_time_s);
    report.totals.speedup = Some(baseline.totals.total_time_s / report.totals.total_time_s);
    Ok(report)
}

/// One method's per-point rejection data in a side-by-side comparison.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MethodColumn {
    pub method: String,
    pub rejection: Vec<f64>,
    pub n_alpha: Vec<usize>,
    pub n_beta: Vec<usize>,
}

/// Side-by-side rejection ratios of several methods on identical data and
/// grid.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CompareReport {
    pub schema_version: u32,
    pub c_values: Vec<f64>,
    pub columns: Vec<MethodColumn>,
    /// When both dome rules are present: whether the tightened rule's
    /// screened set contains the prior rule's at every grid point, as an
    /// index-set inclusion evaluated on one shared solution chain.
    pub essnsv_dominates_ssnsv: Option<bool>,
    /// Number of grid points where the tightened rule pinned strictly more
    /// instances than the prior rule on the shared chain.
    pub essnsv_strictly_larger_points: Option<usize>,
}

/// Run each method over the same grid and tabulate rejections per point.
///
/// When both dome rules are requested, their verdicts are additionally
/// evaluated side by side on one shared unscreened solution chain, which
/// makes the set-inclusion comparison exact rather than count-based.
pub fn compare_methods(
    problem: &ProblemData,
    grid: &PathGrid,
    methods: &[Method],
    opts: &RunOptions,
) -> Result<CompareReport> {
    let mut columns = Vec::with_capacity(methods.len());
    for &method in methods {
        let report = run_path(problem, grid, method, opts)?;
        columns.push(MethodColumn {
            method: method.name().into(),
            rejection: report.points.iter().map(|p| p.rejection_ratio).collect(),
            n_alpha: report.points.iter().map(|p| p.n_alpha).collect(),
            n_beta: report.points.iter().map(|p| p.n_beta).collect(),
        });
    }
    let both_domes = methods.contains(&Method::Ssnsv) && methods.contains(&Method::Essnsv);
    let (dominance, strict) = if both_domes {
        let (dom, strict) = dome_dominance_on_shared_chain(problem, grid, opts)?;
        (Some(dom), Some(strict))
    } else {
        (None, None)
    };
    Ok(CompareReport {
        schema_version: REPORT_SCHEMA_VERSION,
        c_values: grid.values().to_vec(),
        columns,
        essnsv_dominates_ssnsv: dominance,
        essnsv_strictly_larger_points: strict,
    })
}

fn dome_dominance_on_shared_chain(
    problem: &ProblemData,
    grid: &PathGrid,
    opts: &RunOptions,
) -> Result<(bool, usize)> {
    let no_pins = FixedAssignments::none(problem.len());
    let c_values = grid.values();
    let anchor = {
        let sol = solve_dual(
            problem,
            c_values[c_values.len() - 1],
            None,
            &no_pins,
            opts.tol,
            opts.max_outer,
        )?;
        primal_from_dual(problem, &sol).w
    };
    let mut current = solve_dual(
        problem,
        c_values[0],
        None,
        &no_pins,
        opts.tol,
        opts.max_outer,
    )?;
    let mut dominates = true;
    let mut strictly_larger = 0;
    for &c in &c_values[1..] {
        let w_prev = primal_from_dual(problem, &current).w;
        let state = SPathState::new(problem, w_prev, anchor.clone())?;
        let s = ssnsv_screen(problem, &state)?;
        let e = essnsv_screen(problem, &state)?;
        if !e.dominates(&s) {
            dominates = false;
        }
        if e.n_alpha + e.n_beta > s.n_alpha + s.n_beta {
            strictly_larger += 1;
        }
        current = solve_dual(
            problem,
            c,
            Some(&current),
            &no_pins,
            opts.tol,
            opts.max_outer,
        )?;
    }
    Ok((dominates, strictly_larger))
}

/// Median-of-repeats timing of a screening method against the baseline.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TimingComparison {
    pub method: String,
    pub raw_baseline_s: Vec<f64>,
    pub raw_screened_s: Vec<f64>,
    pub median_baseline_s: f64,
    pub median_screened_s: f64,
    pub speedup: f64,
}

fn median(samples: &[f64]) -> f64 {
    let mut sorted = samples.to_vec();
    sorted.sort_by(|a, b| a.total_cmp(b));
    sorted[sorted.len() / 2]
}

/// Time `method` and the baseline over `repeats` full path runs each and
/// compare medians.
pub fn time_methods(
    problem: &ProblemData,
    grid: &PathGrid,
    method: Method,
    opts: &RunOptions,
    repeats: usize,
) -> Result<TimingComparison> {
    if repeats == 0 {
        return Err(Error::InvalidParameter("repeats must be positive".into()));
    }
    let mut raw_baseline = Vec::with_capacity(repeats);
    let mut raw_screened = Vec::with_capacity(repeats);
    for _ in 0..repeats {
        raw_baseline.push(
            run_path(problem, grid, Method::None, opts)?
                .totals
                .total_time_s,
        );
        raw_screened.push(run_path(problem, grid, method, opts)?.totals.total_time_s);
    }
    let median_baseline_s = median(&raw_baseline);
    let median_screened_s = median(&raw_screened);
    Ok(TimingComparison {
        method: method.name().into(),
        raw_baseline_s: raw_baseline,
        raw_screened_s: raw_screened,
        median_baseline_s,
        median_screened_s,
        speedup: median_baseline_s / median_screened_s,
    })
}

/// On-disk report format.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
}

impl FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(ReportFormat::Json),
            "csv" => Ok(ReportFormat::Csv),
            other => Err(Error::InvalidParameter(format!(
                "unknown report format '{other}' (expected json|csv)"
            ))),
        }
    }
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    std::fs::write(path, contents).map_err(|e| Error::Io {
        path: path.display().to_string(),
        source: e,
    })
}

/// Render a path report as a JSON document or CSV table (one row per grid
/// point, totals in trailing `#` comment lines).
pub fn render_report(report: &PathReport, format: ReportFormat) -> Result<String> {
    match format {
        ReportFormat::Json => Ok(serde_json::to_string_pretty(report)?),
        ReportFormat::Csv => {
            let mut out = String::from(
                "c,rejection_ratio,n_alpha,n_beta,solver_iterations,wall_time_s,converged,safety_violations,w_divergence\n",
            );
            for p in &report.points {
                out.push_str(&format!(
                    "{},{},{},{},{},{},{},{},{}\n",
                    p.c,
                    p.rejection_ratio,
                    p.n_alpha,
                    p.n_beta,
                    p.solver_iterations,
                    p.wall_time_s,
                    p.converged,
                    p.safety_violations,
                    p.w_divergence
                ));
            }
            out.push_str(&format!(
                "# schema_version={} method={} loss={}\n",
                report.schema_version, report.method, report.loss
            ));
            out.push_str(&format!(
                "# total_time_s={} init_time_s={} screen_time_s={} safety_violations={}\n",
                report.totals.total_time_s,
                report.totals.init_time_s,
                report.totals.screen_time_s,
                report.totals.safety_violations
            ));
            if let (Some(base), Some(speedup)) =
                (report.totals.baseline_time_s, report.totals.speedup)
            {
                out.push_str(&format!("# baseline_time_s={base} speedup={speedup}\n"));
            }
            Ok(out)
        }
    }
}

/// Write a path report to disk in the chosen format.
pub fn emit_report<P: AsRef<Path>>(
    report: &PathReport,
    format: ReportFormat,
    path: P,
) -> Result<()> {
    write_file(path.as_ref(), &render_report(report, format)?)
}

/// Render a comparison report (rejection ratio per method and grid point).
pub fn render_compare(report: &CompareReport, format: ReportFormat) -> Result<String> {
    match format {
        ReportFormat::Json => Ok(serde_json::to_string_pretty(report)?),
        ReportFormat::Csv => {
            let mut out = String::from("c");
            for col in &report.columns {
                out.push_str(&format!(",rejection_{}", col.method));
            }
            out.push('\n');
            for (j, c) in report.c_values.iter().enumerate() {
                out.push_str(&format!("{c}"));
                for col in &report.columns {
                    out.push_str(&format!(",{}", col.rejection[j]));
                }
                out.push('\n');
            }
            out.push_str(&format!("# schema_version={}\n", report.schema_version));
            if let Some(dom) = report.essnsv_dominates_ssnsv {
                out.push_str(&format!("# essnsv_dominates_ssnsv={dom}\n"));
            }
            if let Some(strict) = report.essnsv_strictly_larger_points {
                out.push_str(&format!("# essnsv_strictly_larger_points={strict}\n"));
            }
            Ok(out)
        }
    }
}

/// Write a comparison report to disk in the chosen format.
pub fn emit_compare<P: AsRef<Path>>(
    report: &CompareReport,
    format: ReportFormat,
    path: P,
) -> Result<()> {
    write_file(path.as_ref(), &render_compare(report, format)?)
}
