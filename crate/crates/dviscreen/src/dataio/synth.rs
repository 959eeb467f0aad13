//! Seeded synthetic datasets: two-Gaussian classification benchmarks and a
//! linear-model regression generator with optional heavy-tailed outliers.

use std::str::FromStr;

use crate::problem::{Instance, Loss};
use crate::Error;

use super::rng::GaussianSource;

/// The three two-dimensional benchmark datasets: two classes of 1000
/// points each, drawn from `N((μ, μ), 0.75²·I)` with `μ = ±1.5, ±0.75,
/// ±0.5`. Smaller `|μ|` means more class overlap and more instances on the
/// margin-violating side.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ToyPreset {
    Toy1,
    Toy2,
    Toy3,
}

impl ToyPreset {
    pub fn mu(self) -> f64 {
        match self {
            ToyPreset::Toy1 => 1.5,
            ToyPreset::Toy2 => 0.75,
            ToyPreset::Toy3 => 0.5,
        }
    }

    pub const SIGMA: f64 = 0.75;
    pub const N_PER_CLASS: usize = 1000;

    /// The preset dataset at a given seed.
    pub fn generate(self, seed: u64) -> Vec<Instance> {
        gen_toy_gaussian(self.mu(), -self.mu(), Self::SIGMA, Self::N_PER_CLASS, seed)
    }

    pub fn name(self) -> &'static str {
        match self {
            ToyPreset::Toy1 => "toy1",
            ToyPreset::Toy2 => "toy2",
            ToyPreset::Toy3 => "toy3",
        }
    }
}

/// Two isotropic Gaussian blobs in the plane: `n_per_class` points at mean
/// `(mu_pos, mu_pos)` labeled `+1` followed by `n_per_class` at
/// `(mu_neg, mu_neg)` labeled `−1`. Deterministic for a fixed seed.
pub fn gen_toy_gaussian(
    mu_pos: f64,
    mu_neg: f64,
    sigma: f64,
    n_per_class: usize,
    seed: u64,
) -> Vec<Instance> {
    assert!(sigma > 0.0, "sigma must be positive");
    let mut g = GaussianSource::new(seed);
    let mut out = Vec::with_capacity(2 * n_per_class);
    for (mu, label) in [(mu_pos, 1.0), (mu_neg, -1.0)] {
        for _ in 0..n_per_class {
            let x1 = mu + sigma * g.next_normal();
            let x2 = mu + sigma * g.next_normal();
            out.push(Instance::new(vec![x1, x2], label));
        }
    }
    out
}

/// A regression dataset together with the generating weight vector.
#[derive(Debug, Clone)]
pub struct RegressionData {
    pub instances: Vec<Instance>,
    pub w_true: Vec<f64>,
}

/// The shipped dataset presets: the three classification benchmarks and the
/// companion regression set (`l=2000`, `n=10`, noise 0.1, 10% outliers).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Preset {
    Toy(ToyPreset),
    Reg,
}

impl Preset {
    pub fn name(self) -> &'static str {
        match self {
            Preset::Toy(t) => t.name(),
            Preset::Reg => "reg",
        }
    }

    /// Loss the preset is built for.
    pub fn default_loss(self) -> Loss {
        match self {
            Preset::Toy(_) => Loss::Hinge,
            Preset::Reg => Loss::Absolute,
        }
    }

    pub fn generate(self, seed: u64) -> Vec<Instance> {
        match self {
            Preset::Toy(t) => t.generate(seed),
            Preset::Reg => gen_regression(2000, 10, 0.1, 0.1, seed).instances,
        }
    }
}

impl FromStr for Preset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "toy1" => Ok(Preset::Toy(ToyPreset::Toy1)),
            "toy2" => Ok(Preset::Toy(ToyPreset::Toy2)),
            "toy3" => Ok(Preset::Toy(ToyPreset::Toy3)),
            "reg" => Ok(Preset::Reg),
            other => Err(Error::InvalidParameter(format!(
                "unknown preset '{other}' (expected toy1|toy2|toy3|reg)"
            ))),
        }
    }
}

/// Linear-model responses `y = ⟨w_true, x⟩ + ε` with standard-normal
/// features, `ε ~ N(0, noise_sigma²)`, and an expected `outlier_fraction`
/// of responses replaced by scaled Cauchy draws. `w_true` is drawn from the
/// same seeded stream and returned alongside the data.
pub fn gen_regression(
    l: usize,
    n: usize,
    noise_sigma: f64,
    outlier_fraction: f64,
    seed: u64,
) -> RegressionData {
    assert!(
        (0.0..1.0).contains(&outlier_fraction),
        "outlier fraction must be in [0, 1)"
    );
    let mut g = GaussianSource::new(seed);
    let w_true: Vec<f64> = (0..n).map(|_| g.next_normal()).collect();
    let mut instances = Vec::with_capacity(l);
    for _ in 0..l {
        let x: Vec<f64> = (0..n).map(|_| g.next_normal()).collect();
        let clean: f64 = x.iter().zip(&w_true).map(|(a, b)| a * b).sum();
        let mut y = clean + noise_sigma * g.next_normal();
        if outlier_fraction > 0.0 && g.next_uniform() < outlier_fraction {
            // replace the response with a wide Cauchy draw
            let u = g.next_uniform();
            y = 5.0 * (std::f64::consts::PI * (u - 0.5)).tan();
        }
        instances.push(Instance::new(x, y));
    }
    RegressionData { instances, w_true }
}

/// Scale each feature into `[-1, 1]` by dividing by its max absolute value
/// over the dataset (features that are identically zero stay zero). No
/// shift is applied: these models carry no intercept, so an affine shift
/// would change the problem.
pub fn scale_features(instances: &[Instance]) -> Vec<Instance> {
    if instances.is_empty() {
        return Vec::new();
    }
    let n = instances[0].features.len();
    let mut max_abs = vec![0.0f64; n];
    for inst in instances {
        for (m, x) in max_abs.iter_mut().zip(&inst.features) {
            *m = m.max(x.abs());
        }
    }
    instances
        .iter()
        .map(|inst| {
            let features = inst
                .features
                .iter()
                .zip(&max_abs)
                .map(|(&x, &m)| if m > 0.0 { x / m } else { 0.0 })
                .collect();
            Instance::new(features, inst.label)
        })
        .collect()
}
