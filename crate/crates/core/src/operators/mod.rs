//! Variation operators: point mutation, crossover and the segment-level
//! macro-operators (inversion, translocation, duplication).
//!
//! Every operator is a pure function of its inputs and the random source.

mod crossover;
mod macros;
mod mutation;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::genome::{FlatGenome, IdWidth, SegmentedGenome};

pub use crossover::{crossover_flat, crossover_segmented, one_point_at};
pub use macros::{duplication, inversion, translocation, SegmentLayout};
pub use mutation::{point_mutate_flat, point_mutate_segmented};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CrossoverKind {
    OnePointFlat,
    UniformFlat,
    OnePointStream,
    SegmentAligned,
}

impl CrossoverKind {
    pub fn is_flat(self) -> bool {
        matches!(
            self,
            CrossoverKind::OnePointFlat | CrossoverKind::UniformFlat
        )
    }
}

/// Operator rates. Macro-operator probabilities apply once per offspring.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct OperatorConfig {
    pub p_m: f64,
    pub p_sig: f64,
    pub crossover: CrossoverKind,
    pub p_inversion: f64,
    pub p_translocation: f64,
    pub p_duplication: f64,
    pub id_width: u32,
}

impl Default for OperatorConfig {
    fn default() -> Self {
        Self {
            p_m: 0.0,
            p_sig: 0.0,
            crossover: CrossoverKind::OnePointFlat,
            p_inversion: 0.0,
            p_translocation: 0.0,
            p_duplication: 0.0,
            id_width: IdWidth::default().get(),
        }
    }
}

fn check_probability(field: &'static str, p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::param(field, format!("must be in [0, 1], got {p}")))
    }
}

impl OperatorConfig {
    pub fn with_mutation(p_m: f64) -> Self {
        Self {
            p_m,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        check_probability("p_m", self.p_m)?;
        check_probability("p_sig", self.p_sig)?;
        check_probability("p_inversion", self.p_inversion)?;
        check_probability("p_translocation", self.p_translocation)?;
        check_probability("p_duplication", self.p_duplication)?;
        if self.p_m + self.p_sig > 1.0 {
            return Err(Error::param(
                "p_sig",
                format!(
                    "p_m + p_sig must not exceed 1, got {}",
                    self.p_m + self.p_sig
                ),
            ));
        }
        IdWidth::new(self.id_width)?;
        Ok(())
    }

    pub fn width(&self) -> IdWidth {
        IdWidth::new(self.id_width).unwrap_or_default()
    }
}

/// Genomes the engine can vary.
pub trait Variation: Clone + PartialEq + Send + Sync {
    /// Representation name used in diagnostics.
    const KIND: &'static str;

    fn point_mutate<R: Rng + ?Sized>(&self, cfg: &OperatorConfig, rng: &mut R) -> Self;

    fn crossover<R: Rng + ?Sized>(
        &self,
        other: &Self,
        cfg: &OperatorConfig,
        rng: &mut R,
    ) -> Result<Self>;

    /// Applies the configured macro-operators. Identity for flat genomes.
    fn macro_mutate<R: Rng + ?Sized>(self, _cfg: &OperatorConfig, _rng: &mut R) -> Self {
        self
    }

    fn as_flat(&self) -> Option<&FlatGenome> {
        None
    }

    fn check_crossover(kind: CrossoverKind) -> Result<()>;
}

impl Variation for FlatGenome {
    const KIND: &'static str = "flat";

    fn point_mutate<R: Rng + ?Sized>(&self, cfg: &OperatorConfig, rng: &mut R) -> Self {
        point_mutate_flat(self, cfg.p_m, rng)
    }

    fn crossover<R: Rng + ?Sized>(
        &self,
        other: &Self,
        cfg: &OperatorConfig,
        rng: &mut R,
    ) -> Result<Self> {
        crossover_flat(self, other, cfg.crossover, rng)
    }

    fn as_flat(&self) -> Option<&FlatGenome> {
        Some(self)
    }

    fn check_crossover(kind: CrossoverKind) -> Result<()> {
        if kind.is_flat() {
            Ok(())
        } else {
            Err(Error::param(
                "crossover",
                format!("{kind:?} does not apply to flat genomes"),
            ))
        }
    }
}

impl Variation for SegmentedGenome {
    const KIND: &'static str = "segmented";

    fn point_mutate<R: Rng + ?Sized>(&self, cfg: &OperatorConfig, rng: &mut R) -> Self {
        point_mutate_segmented(self, cfg.p_m, cfg.p_sig, rng)
    }

    fn crossover<R: Rng + ?Sized>(
        &self,
        other: &Self,
        cfg: &OperatorConfig,
        rng: &mut R,
    ) -> Result<Self> {
        crossover_segmented(self, other, cfg.crossover, cfg.width(), rng)
    }

    fn macro_mutate<R: Rng + ?Sized>(self, cfg: &OperatorConfig, rng: &mut R) -> Self {
        let width = cfg.width();
        let mut g = self;
        if cfg.p_inversion > 0.0 && rng.gen::<f64>() < cfg.p_inversion {
            g = inversion(&g, width, rng);
        }
        if cfg.p_translocation > 0.0 && rng.gen::<f64>() < cfg.p_translocation {
            g = translocation(&g, width, rng);
        }
        if cfg.p_duplication > 0.0 && rng.gen::<f64>() < cfg.p_duplication {
            g = duplication(&g, width, rng);
        }
        g
    }

    fn check_crossover(kind: CrossoverKind) -> Result<()> {
        if kind.is_flat() {
            Err(Error::param(
                "crossover",
                format!("{kind:?} does not apply to segmented genomes"),
            ))
        } else {
            Ok(())
        }
    }
}
