//! Dataset ingestion, generation, and serialization.
//!
//! File formats: LIBSVM text (`label idx:val ...`, 1-based ascending
//! indices) and numeric CSV with an optional header. Generators are seeded
//! and byte-reproducible across platforms; see [`rng`] for the exact
//! algorithms.

mod io;
pub mod rng;
mod synth;

pub use io::{read_csv, read_libsvm, write_libsvm, LabelColumn};
pub use synth::{
    gen_regression, gen_toy_gaussian, scale_features, Preset, RegressionData, ToyPreset,
};
