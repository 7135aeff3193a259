//! Genetic-algorithm laboratory.
//!
//! Classical bit-vector GAs sit next to a signal-structured representation in
//! which genes carry their own ids, so inversion, translocation and
//! duplication move meaning around intact. The [`engine`] runs generational
//! truncation selection from random or nearly homogeneous starting
//! populations; [`analysis`] holds the statistics and closed-form predictors
//! used to read the runs.

pub mod analysis;
pub mod engine;
pub mod error;
pub mod genome;
pub mod landscapes;
pub mod operators;

pub use engine::{GaConfig, InitMode, RunTrace};
pub use error::{Error, Result};
pub use genome::{FlatGenome, GeneMap, IdWidth, Segment, SegmentedGenome, Symbol};
pub use landscapes::{Landscape, LandscapeSpec};
pub use operators::{CrossoverKind, OperatorConfig, Variation};

/// Deterministic random source used throughout.
pub type Rng = rand_chacha::ChaCha8Rng;

/// Seeds the crate's random source.
pub fn seeded_rng(seed: u64) -> Rng {
    use rand::SeedableRng;
    Rng::seed_from_u64(seed)
}
