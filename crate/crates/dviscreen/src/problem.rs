//! Domain types for the unified problem family and construction of the
//! transformed training data.
//!
//! A dataset `{(xᵢ, yᵢ)}` plus a loss choice is turned into the rows
//! `zᵢ = aᵢxᵢ` and targets `ȳᵢ = bᵢyᵢ` on which every solver and screening
//! rule in this crate operates. For the hinge loss `aᵢ = -yᵢ, bᵢ = yᵢ`; for
//! the absolute loss `aᵢ = -1, bᵢ = 1`. Instance norms `‖zᵢ‖` are cached at
//! construction since the rules evaluate them for every instance at every
//! grid point.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::Result;

/// A single training instance: a dense feature vector and its label.
///
/// The label is the class sign (±1) for classification and the real-valued
/// response for regression.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Instance {
    pub features: Vec<f64>,
    pub label: f64,
}

impl Instance {
    pub fn new(features: Vec<f64>, label: f64) -> Self {
        Self { features, label }
    }
}

/// The sublinear loss defining the model.
///
/// The conjugate of a nonconstant, nonnegative sublinear loss is the
/// indicator of an interval `[α, β]`, which becomes the box constraint of
/// the dual problem. Only the two losses used by the models in this crate
/// are provided.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Loss {
    /// Hinge loss `φ(t) = max(t, 0)`: linear SVM. Box `[0, 1]`.
    Hinge,
    /// Absolute loss `φ(t) = |t|`: least absolute deviations. Box `[-1, 1]`.
    Absolute,
}

impl Loss {
    /// Interval `[α, β]` whose indicator is the conjugate of the loss.
    pub fn interval(self) -> BoxInterval {
        match self {
            Loss::Hinge => BoxInterval { lo: 0.0, hi: 1.0 },
            Loss::Absolute => BoxInterval { lo: -1.0, hi: 1.0 },
        }
    }

    /// Row multiplier `aᵢ` applied to the features of an instance with label `y`.
    pub fn a_of(self, y: f64) -> f64 {
        match self {
            Loss::Hinge => -y,
            Loss::Absolute => -1.0,
        }
    }

    /// Target multiplier `bᵢ` applied to the label `y`.
    pub fn b_of(self, y: f64) -> f64 {
        match self {
            Loss::Hinge => y,
            Loss::Absolute => 1.0,
        }
    }

    /// Loss value `φ(t)`.
    pub fn eval(self, t: f64) -> f64 {
        match self {
            Loss::Hinge => t.max(0.0),
            Loss::Absolute => t.abs(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Loss::Hinge => "hinge",
            Loss::Absolute => "absolute",
        }
    }
}

/// Conjugate interval `[α, β]` of a loss kind.
pub fn conjugate_interval(kind: Loss) -> BoxInterval {
    kind.interval()
}

/// A closed interval `[lo, hi]` with `lo < hi`; the per-coordinate dual box.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoxInterval {
    pub lo: f64,
    pub hi: f64,
}

impl BoxInterval {
    pub fn clamp(&self, t: f64) -> f64 {
        t.clamp(self.lo, self.hi)
    }

    pub fn contains(&self, t: f64) -> bool {
        self.lo <= t && t <= self.hi
    }
}

/// The transformed training set: rows `zᵢ = aᵢxᵢ`, targets `ȳᵢ = bᵢyᵢ`,
/// cached norms, and the loss that produced them.
///
/// Immutable after construction; row `i` of the transformed matrix always
/// corresponds to instance `i` of the input.
#[derive(Debug, Clone)]
pub struct ProblemData {
    z: Vec<f64>, // row-major l×n
    ybar: Vec<f64>,
    z_norms: Vec<f64>,
    loss: Loss,
    l: usize,
    n: usize,
}

impl ProblemData {
    /// Number of instances.
    pub fn len(&self) -> usize {
        self.l
    }

    pub fn is_empty(&self) -> bool {
        self.l == 0
    }

    /// Feature dimension.
    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn loss(&self) -> Loss {
        self.loss
    }

    pub fn interval(&self) -> BoxInterval {
        self.loss.interval()
    }

    /// Transformed row `zᵢ = aᵢxᵢ`.
    pub fn z_row(&self, i: usize) -> &[f64] {
        &self.z[i * self.n..(i + 1) * self.n]
    }

    /// Transformed target `ȳᵢ = bᵢyᵢ`.
    pub fn ybar(&self, i: usize) -> f64 {
        self.ybar[i]
    }

    pub fn ybar_all(&self) -> &[f64] {
        &self.ybar
    }

    /// Cached `‖zᵢ‖`.
    pub fn z_norm(&self, i: usize) -> f64 {
        self.z_norms[i]
    }

    /// `v = Zᵀθ = Σᵢ θᵢ zᵢ`, the length-`n` vector maintained by the solver
    /// and shared by all screening rules.
    pub fn z_transpose_theta(&self, theta: &[f64]) -> Vec<f64> {
        debug_assert_eq!(theta.len(), self.l);
        let mut v = vec![0.0; self.n];
        for (i, &t) in theta.iter().enumerate() {
            if t != 0.0 {
                for (vj, zj) in v.iter_mut().zip(self.z_row(i)) {
                    *vj += t * zj;
                }
            }
        }
        v
    }

    /// Assemble a problem directly from transformed rows. Used when a
    /// reduced problem is materialized as a standalone box QP; `ybar` here
    /// carries the adjusted linear term, not `bᵢyᵢ`.
    pub(crate) fn from_transformed(z: Vec<f64>, ybar: Vec<f64>, loss: Loss, n: usize) -> Self {
        let l = ybar.len();
        debug_assert_eq!(z.len(), l * n);
        let z_norms = (0..l).map(|i| norm(&z[i * n..(i + 1) * n])).collect();
        Self {
            z,
            ybar,
            z_norms,
            loss,
            l,
            n,
        }
    }
}

pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

/// Build the transformed problem from raw instances.
///
/// Errors on an empty dataset, inconsistent dimensions, non-finite values,
/// and (for the hinge loss) labels outside `{-1, +1}`. No silent label
/// remapping is performed.
pub fn build_problem(instances: &[Instance], loss: Loss) -> Result<ProblemData> {
    if instances.is_empty() {
        return Err(Error::EmptyDataset);
    }
    let n = instances[0].features.len();
    let l = instances.len();
    let mut z = Vec::with_capacity(l * n);
    let mut ybar = Vec::with_capacity(l);
    let mut z_norms = Vec::with_capacity(l);
    for (i, inst) in instances.iter().enumerate() {
        if inst.features.len() != n {
            return Err(Error::DimensionMismatch {
                index: i,
                expected: n,
                found: inst.features.len(),
            });
        }
        if !inst.label.is_finite() || inst.features.iter().any(|x| !x.is_finite()) {
            return Err(Error::NonFiniteValue { index: i });
        }
        if loss == Loss::Hinge && inst.label != 1.0 && inst.label != -1.0 {
            return Err(Error::NonBinaryLabel {
                index: i,
                label: inst.label,
            });
        }
        let a = loss.a_of(inst.label);
        let start = z.len();
        z.extend(inst.features.iter().map(|&x| a * x));
        z_norms.push(norm(&z[start..]));
        ybar.push(loss.b_of(inst.label) * inst.label);
    }
    Ok(ProblemData {
        z,
        ybar,
        z_norms,
        loss,
        l,
        n,
    })
}
