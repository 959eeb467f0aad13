//! Safe screening for L2-regularized sublinear-loss models (linear SVM and
//! least absolute deviations) along a regularization path.
//!
//! Both models are instances of one problem family: minimize
//! `(1/2)‖w‖² + C · Σᵢ φ(⟨w, aᵢxᵢ⟩ + bᵢyᵢ)` with a sublinear loss φ. Its dual
//! is a box-constrained quadratic over `θ ∈ [α, β]^l`, and the KKT conditions
//! split the training set into instances pinned at a box endpoint
//! (non-support vectors) and the rest. The screening rules here bound the
//! dual optimum at a new parameter value `C` using the solution at a smaller
//! one, and pin instances whose dual coordinate is provably at `α` or `β` —
//! those rows can be dropped from the solve without changing the result.
//!
//! Modules:
//! * [`problem`] — instances, losses, and the transformed training data.
//! * [`solver`] — dual coordinate descent, primal recovery, KKT partition.
//! * [`screen`] — DVI ball rules plus the SSNSV/ESSNSV dome rules.
//! * [`dataio`] — LIBSVM/CSV ingestion and seeded synthetic generators.
//! * [`runner`] — parameter grids, path execution, safety checks, reports.

pub mod dataio;
pub mod error;
pub mod problem;
pub mod runner;
pub mod screen;
pub mod solver;

pub use error::Error;
pub use problem::{build_problem, conjugate_interval, BoxInterval, Instance, Loss, ProblemData};
pub use screen::{ScreeningResult, Verdict};
pub use solver::{solve_dual, DualSolution, FixedAssignments, PrimalSolution};

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
