//! Crate-wide error type.

use thiserror::Error;

#[derive(Error, Debug)]
pub enum Error {
    #[error("dataset is empty")]
    EmptyDataset,

    #[error("instance {index} has dimension {found}, expected {expected}")]
    DimensionMismatch {
        index: usize,
        expected: usize,
        found: usize,
    },

    #[error("instance {index} has non-finite feature or label")]
    NonFiniteValue { index: usize },

    #[error("hinge loss requires labels in {{-1, +1}}, instance {index} has label {label}")]
    NonBinaryLabel { index: usize, label: f64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("screening rules require C_next >= C_k > 0, got C_k={c_k}, C_next={c_next}")]
    DecreasingParameter { c_k: f64, c_next: f64 },

    #[error("dome region is infeasible: |u'o - d| = {gap} exceeds r·‖u‖ = {limit}")]
    InfeasibleRegion { gap: f64, limit: f64 },

    #[error("{rule} is only defined for the hinge loss")]
    HingeOnly { rule: &'static str },

    #[error("reference solution has zero norm; the half-space of the dome is undefined")]
    ZeroReferenceSolution,

    #[error("method {method} cannot run on a {loss} problem")]
    MethodLossMismatch { method: String, loss: String },

    #[error("{path}:{line}: {msg}")]
    ParseLibsvm {
        path: String,
        line: usize,
        msg: String,
    },

    #[error("{path}: row {row}, column {col}: {msg}")]
    ParseCsv {
        path: String,
        row: usize,
        col: usize,
        msg: String,
    },

    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("report serialization failed: {0}")]
    Report(#[from] serde_json::Error),
}
