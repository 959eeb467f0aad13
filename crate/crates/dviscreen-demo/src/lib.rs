//! Browser bindings for the screening demo. Three operations, all returning
//! JSON strings the page renders onto canvases:
//!
//! * [`generate`] — a seeded two-Gaussian dataset;
//! * [`train_at`] — the SVM solution at one parameter value, with the KKT
//!   partition of every point;
//! * [`rejection_path`] — per-grid-point screening rejection ratios for a
//!   chosen rule along a log-spaced parameter path.
//!
//! The dataset is regenerated from its seed inside each call, so the page
//! needs no state beyond the control values.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use dviscreen::dataio::gen_toy_gaussian;
use dviscreen::problem::{build_problem, Instance, Loss, ProblemData};
use dviscreen::runner::{log_grid, run_path, Method, RunOptions};
use dviscreen::solver::{kkt_partition, primal_from_dual, solve_dual, FixedAssignments};

fn dataset(mu: f64, sigma: f64, n_per_class: u32, seed: u32) -> Vec<Instance> {
    gen_toy_gaussian(mu, -mu, sigma, n_per_class as usize, seed as u64)
}

fn problem_from(instances: &[Instance]) -> Result<ProblemData, String> {
    build_problem(instances, Loss::Hinge).map_err(|e| e.to_string())
}

fn to_json<T: Serialize>(value: &T) -> Result<String, String> {
    serde_json::to_string(value).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct PointsOut {
    x: Vec<f64>,
    y: Vec<f64>,
    label: Vec<i8>,
}

/// Two Gaussian classes at `(±mu, ±mu)` with standard deviation `sigma`.
#[wasm_bindgen]
pub fn generate(mu: f64, sigma: f64, n_per_class: u32, seed: u32) -> Result<String, JsValue> {
    generate_json(mu, sigma, n_per_class, seed).map_err(|e| JsValue::from_str(&e))
}

pub fn generate_json(mu: f64, sigma: f64, n_per_class: u32, seed: u32) -> Result<String, String> {
    let instances = dataset(mu, sigma, n_per_class, seed);
    let out = PointsOut {
        x: instances.iter().map(|i| i.features[0]).collect(),
        y: instances.iter().map(|i| i.features[1]).collect(),
        label: instances.iter().map(|i| i.label as i8).collect(),
    };
    to_json(&out)
}

#[derive(Serialize)]
struct TrainOut {
    w: Vec<f64>,
    objective: f64,
    iterations: usize,
    converged: bool,
    /// Per-point set: "r" (margin exceeded, dual pinned low), "e" (support),
    /// "l" (margin violated, dual pinned high).
    partition: Vec<&'static str>,
    n_r: usize,
    n_e: usize,
    n_l: usize,
}

/// Solve the SVM at parameter `c` and classify every training point by the
/// KKT conditions.
#[wasm_bindgen]
pub fn train_at(
    mu: f64,
    sigma: f64,
    n_per_class: u32,
    seed: u32,
    c: f64,
) -> Result<String, JsValue> {
    train_at_json(mu, sigma, n_per_class, seed, c).map_err(|e| JsValue::from_str(&e))
}

pub fn train_at_json(
    mu: f64,
    sigma: f64,
    n_per_class: u32,
    seed: u32,
    c: f64,
) -> Result<String, String> {
    let instances = dataset(mu, sigma, n_per_class, seed);
    let problem = problem_from(&instances)?;
    let fixed = FixedAssignments::none(problem.len());
    let sol = solve_dual(&problem, c, None, &fixed, 1e-6, 100_000).map_err(|e| e.to_string())?;
    let primal = primal_from_dual(&problem, &sol);
    let part = kkt_partition(&problem, &primal, 1e-6);
    let mut partition = vec!["e"; problem.len()];
    for &i in &part.r {
        partition[i] = "r";
    }
    for &i in &part.l {
        partition[i] = "l";
    }
    let out = TrainOut {
        w: primal.w,
        objective: sol.objective,
        iterations: sol.iterations,
        converged: sol.converged,
        n_r: part.r.len(),
        n_e: part.e.len(),
        n_l: part.l.len(),
        partition,
    };
    to_json(&out)
}

#[derive(Serialize)]
struct PathOut {
    c: Vec<f64>,
    alpha_ratio: Vec<f64>,
    beta_ratio: Vec<f64>,
    rejection: Vec<f64>,
    average_rejection: f64,
    method: String,
}

/// Screening rejection ratios along a log grid for one rule.
#[wasm_bindgen]
pub fn rejection_path(
    mu: f64,
    sigma: f64,
    n_per_class: u32,
    seed: u32,
    method: &str,
    c_min: f64,
    c_max: f64,
    k: u32,
) -> Result<String, JsValue> {
    rejection_path_json(mu, sigma, n_per_class, seed, method, c_min, c_max, k)
        .map_err(|e| JsValue::from_str(&e))
}

#[allow(clippy::too_many_arguments)]
pub fn rejection_path_json(
    mu: f64,
    sigma: f64,
    n_per_class: u32,
    seed: u32,
    method: &str,
    c_min: f64,
    c_max: f64,
    k: u32,
) -> Result<String, String> {
    let method: Method = method
        .parse()
        .map_err(|e: dviscreen::Error| e.to_string())?;
    let instances = dataset(mu, sigma, n_per_class, seed);
    let problem = problem_from(&instances)?;
    let grid = log_grid(c_min, c_max, k as usize).map_err(|e| e.to_string())?;
    let report =
        run_path(&problem, &grid, method, &RunOptions::default()).map_err(|e| e.to_string())?;
    let l = problem.len() as f64;
    let rejection: Vec<f64> = report.points.iter().map(|p| p.rejection_ratio).collect();
    let out = PathOut {
        c: report.points.iter().map(|p| p.c).collect(),
        alpha_ratio: report.points.iter().map(|p| p.n_alpha as f64 / l).collect(),
        beta_ratio: report.points.iter().map(|p| p.n_beta as f64 / l).collect(),
        average_rejection: rejection.iter().sum::<f64>() / rejection.len() as f64,
        rejection,
        method: method.name().into(),
    };
    to_json(&out)
}
