//! Fitness landscapes.
//!
//! Every landscape is an immutable, deterministic function of the genome and
//! its construction parameters (including the seed), so one instance can be
//! shared across threads.

use rand::Rng;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::genome::{decode_extended, parse, FlatGenome, IdWidth, SegmentedGenome};
use crate::seeded_rng;

/// Fitness of a genome of type `G`.
pub trait Evaluate<G>: Send + Sync {
    fn evaluate(&self, genome: &G) -> f64;
}

/// Number of ones.
pub fn eval_onemax(g: &FlatGenome) -> f64 {
    g.count_ones() as f64
}

/// Number of relevant target bits set by a controller: `round(frac · m)`
/// with halves rounded up, where `frac` is the controller's fraction of ones.
pub fn relevant_bits(controller: &[bool], target_width: usize) -> usize {
    let c = controller.len();
    if c == 0 {
        return 0;
    }
    let ones = controller.iter().filter(|&&b| b).count();
    // floor(ones·m/c + 1/2) in integers.
    (2 * ones * target_width + c) / (2 * c)
}

/// Controller bits followed by target bits. The controller, read as an
/// extended gene, fixes how many leading target bits count; fitness is the
/// number of ones among them.
pub fn eval_second_order(g: &FlatGenome, controller: usize, target: usize) -> Result<f64> {
    if g.len() != controller + target {
        return Err(Error::LengthMismatch {
            left: g.len(),
            right: controller + target,
        });
    }
    if controller == 0 {
        return Err(Error::param("controller", "must be at least 1"));
    }
    let (ctl, tgt) = g.bits().split_at(controller);
    let r = relevant_bits(ctl, target);
    Ok(tgt[..r].iter().filter(|&&b| b).count() as f64)
}

/// Largest epistasis degree for which contribution tables are materialized.
pub const MAX_NK_DEGREE: usize = 20;

/// NK-style landscape: locus `i` contributes a table value indexed by its own
/// bit and the bits of its `k` circular right-neighbours.
#[derive(Debug, Clone, PartialEq)]
pub struct NkLandscape {
    length: usize,
    k: usize,
    seed: u64,
    tables: Vec<f64>,
}

impl NkLandscape {
    pub fn new(length: usize, k: usize, seed: u64) -> Result<Self> {
        if length == 0 {
            return Err(Error::param("length", "must be at least 1"));
        }
        if k >= length {
            return Err(Error::param(
                "k",
                format!("must be below length {length}, got {k}"),
            ));
        }
        if k > MAX_NK_DEGREE {
            return Err(Error::param(
                "k",
                format!("at most {MAX_NK_DEGREE} supported, got {k}"),
            ));
        }
        let mut rng = seeded_rng(seed);
        let tables = (0..length << (k + 1)).map(|_| rng.gen::<f64>()).collect();
        Ok(Self {
            length,
            k,
            seed,
            tables,
        })
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Table entry of locus `i` for a neighbourhood pattern (own bit most
    /// significant).
    pub fn contribution(&self, locus: usize, pattern: usize) -> f64 {
        self.tables[(locus << (self.k + 1)) | pattern]
    }

    fn pattern(&self, bits: &[bool], locus: usize) -> usize {
        (0..=self.k).fold(0usize, |acc, j| {
            (acc << 1) | bits[(locus + j) % self.length] as usize
        })
    }
}

impl Evaluate<FlatGenome> for NkLandscape {
    /// Mean contribution over loci, in `[0, 1)`. The genome must have the
    /// landscape's length.
    fn evaluate(&self, g: &FlatGenome) -> f64 {
        let bits = g.bits();
        debug_assert_eq!(bits.len(), self.length);
        let total: f64 = (0..self.length)
            .map(|i| self.contribution(i, self.pattern(bits, i)))
            .sum();
        total / self.length as f64
    }
}

/// Uncorrelated landscape: a SHA-256 hash of the seed and bits, mapped to
/// `[0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RandomTable {
    pub seed: u64,
}

impl Evaluate<FlatGenome> for RandomTable {
    fn evaluate(&self, g: &FlatGenome) -> f64 {
        let mut packed = vec![0u8; g.len().div_ceil(8)];
        for (i, &b) in g.bits().iter().enumerate() {
            packed[i / 8] |= (b as u8) << (i % 8);
        }
        let mut h = Sha256::new();
        h.update(b"bga-random-table");
        h.update(self.seed.to_le_bytes());
        h.update((g.len() as u64).to_le_bytes());
        h.update(&packed);
        let digest = h.finalize();
        let mut word = [0u8; 8];
        word.copy_from_slice(&digest[..8]);
        (u64::from_le_bytes(word) >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }
}

/// Weighted sum of extended-gene values over the parsed genes of a
/// segmented genome. Missing genes contribute 0.
#[derive(Debug, Clone, PartialEq)]
pub struct SegmentedSum {
    width: IdWidth,
    weights: Vec<f64>,
}

impl SegmentedSum {
    pub fn new(width: IdWidth, weights: Vec<f64>) -> Result<Self> {
        if weights.len() != width.id_count() {
            return Err(Error::param(
                "weights",
                format!(
                    "expected {} weights for id width {}, got {}",
                    width.id_count(),
                    width.get(),
                    weights.len()
                ),
            ));
        }
        if let Some(w) = weights.iter().find(|w| !w.is_finite()) {
            return Err(Error::param("weights", format!("must be finite, got {w}")));
        }
        Ok(Self { width, weights })
    }

    pub fn width(&self) -> IdWidth {
        self.width
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }
}

impl Evaluate<SegmentedGenome> for SegmentedSum {
    fn evaluate(&self, g: &SegmentedGenome) -> f64 {
        parse(g, self.width)
            .entries()
            .iter()
            .map(|(&id, payload)| self.weights[id as usize] * decode_extended(payload).value)
            .sum()
    }
}

/// Landscapes over flat genomes.
#[derive(Debug, Clone, PartialEq)]
pub enum FlatLandscape {
    OneMax { length: usize },
    SecondOrder { controller: usize, target: usize },
    RuggedNk(NkLandscape),
    RandomTable { length: usize, table: RandomTable },
}

impl FlatLandscape {
    /// Genome length the landscape is defined on.
    pub fn length(&self) -> usize {
        match self {
            FlatLandscape::OneMax { length } => *length,
            FlatLandscape::SecondOrder { controller, target } => controller + target,
            FlatLandscape::RuggedNk(nk) => nk.length(),
            FlatLandscape::RandomTable { length, .. } => *length,
        }
    }
}

impl Evaluate<FlatGenome> for FlatLandscape {
    fn evaluate(&self, g: &FlatGenome) -> f64 {
        match self {
            FlatLandscape::OneMax { .. } => eval_onemax(g),
            FlatLandscape::SecondOrder { controller, target } => {
                let (ctl, tgt) = g.bits().split_at(*controller);
                let r = relevant_bits(ctl, *target);
                tgt[..r].iter().filter(|&&b| b).count() as f64
            }
            FlatLandscape::RuggedNk(nk) => nk.evaluate(g),
            FlatLandscape::RandomTable { table, .. } => table.evaluate(g),
        }
    }
}

/// A built landscape of either representation.
#[derive(Debug, Clone, PartialEq)]
pub enum Landscape {
    Flat(FlatLandscape),
    Segmented(SegmentedSum),
}

impl Landscape {
    pub fn representation(&self) -> &'static str {
        match self {
            Landscape::Flat(_) => "flat",
            Landscape::Segmented(_) => "segmented",
        }
    }
}

/// File-level description of a landscape.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum LandscapeSpec {
    Onemax {
        #[serde(alias = "L")]
        length: usize,
    },
    SecondOrder {
        #[serde(alias = "c")]
        controller: usize,
        #[serde(alias = "m")]
        target: usize,
    },
    RuggedNk {
        #[serde(alias = "L")]
        length: usize,
        #[serde(alias = "K")]
        k: usize,
        #[serde(default)]
        seed: u64,
    },
    RandomTable {
        #[serde(alias = "L")]
        length: usize,
        #[serde(default)]
        seed: u64,
    },
    SegmentedSum {
        #[serde(alias = "g_width")]
        id_width: u32,
        weights: Vec<f64>,
    },
}

impl LandscapeSpec {
    pub fn build(&self) -> Result<Landscape> {
        let flat = |l: FlatLandscape| {
            if l.length() == 0 {
                Err(Error::param("length", "must be at least 1"))
            } else {
                Ok(Landscape::Flat(l))
            }
        };
        match *self {
            LandscapeSpec::Onemax { length } => flat(FlatLandscape::OneMax { length }),
            LandscapeSpec::SecondOrder { controller, target } => {
                if controller == 0 {
                    return Err(Error::param("controller", "must be at least 1"));
                }
                flat(FlatLandscape::SecondOrder { controller, target })
            }
            LandscapeSpec::RuggedNk { length, k, seed } => {
                flat(FlatLandscape::RuggedNk(NkLandscape::new(length, k, seed)?))
            }
            LandscapeSpec::RandomTable { length, seed } => flat(FlatLandscape::RandomTable {
                length,
                table: RandomTable { seed },
            }),
            LandscapeSpec::SegmentedSum {
                id_width,
                ref weights,
            } => Ok(Landscape::Segmented(SegmentedSum::new(
                IdWidth::new(id_width)?,
                weights.clone(),
            )?)),
        }
    }
}
