//! Experiment config files.
//!
//! Configs are TOML: flat `key = value` lines grouped into sections. Parse
//! and validation errors are reported with the line of the offending key
//! where one can be found.

use std::fs;
use std::path::Path;

use bga_core::analysis::{CompareConfig, VariantConfig};
use bga_core::engine::{GaParams, SegmentedTemplate};
use bga_core::{GaConfig, LandscapeSpec, OperatorConfig};
use serde::Deserialize;

use crate::error::{CliError, Result};

/// Seeds used when none are given.
pub const DEFAULT_SEEDS: [u64; 10] = [1, 2, 3, 4, 5, 6, 7, 8, 9, 10];

#[derive(Debug, Clone, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunOutput {
    /// Trace CSV path, relative to the output directory.
    pub trace: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
struct RunFile {
    #[serde(default)]
    seed: u64,
    ga: GaParams,
    #[serde(default)]
    operators: OperatorConfig,
    landscape: LandscapeSpec,
    #[serde(default)]
    genome: Option<SegmentedTemplate>,
    #[serde(default)]
    output: RunOutput,
}

#[derive(Debug, Clone, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CompareOutput {
    pub report: Option<String>,
    pub replicates: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
struct CompareFile {
    budget: usize,
    #[serde(default)]
    seeds: Option<Vec<u64>>,
    landscape: LandscapeSpec,
    #[serde(default)]
    genome: Option<SegmentedTemplate>,
    classical: VariantConfig,
    biomimetic: VariantConfig,
    #[serde(default)]
    output: CompareOutput,
}

/// 1-based line holding byte `offset`.
fn line_of(src: &str, offset: usize) -> usize {
    src[..offset.min(src.len())].matches('\n').count() + 1
}

/// 1-based line of the first `key = ...` assignment.
pub fn locate_key(src: &str, key: &str) -> Option<usize> {
    src.lines()
        .position(|line| {
            let line = line.trim_start();
            line.strip_prefix(key)
                .map(|rest| rest.trim_start().starts_with('='))
                .unwrap_or(false)
        })
        .map(|i| i + 1)
}

fn parse_error(path: &Path, src: &str, e: toml::de::Error) -> CliError {
    let msg = e.message().trim().to_string();
    match e.span() {
        Some(span) => CliError::Validation(format!(
            "{}:{}: {msg}",
            path.display(),
            line_of(src, span.start)
        )),
        None => CliError::Validation(format!("{}: {msg}", path.display())),
    }
}

fn validation_error(path: &Path, src: &str, e: bga_core::Error) -> CliError {
    let line = match &e {
        bga_core::Error::InvalidParameter { field, .. } => locate_key(src, field),
        bga_core::Error::InvalidIdWidth(_) => {
            locate_key(src, "id_width").or_else(|| locate_key(src, "g_width"))
        }
        bga_core::Error::BudgetMismatch { .. } => locate_key(src, "budget"),
        _ => None,
    };
    match line {
        Some(l) => CliError::Validation(format!("{}:{l}: {e}", path.display())),
        None => CliError::Validation(format!("{}: {e}", path.display())),
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| CliError::io(path, e))
}

/// Reads and validates a single-run config.
pub fn load_run(path: &Path) -> Result<(GaConfig, RunOutput)> {
    let src = read(path)?;
    parse_run(path, &src)
}

pub fn parse_run(path: &Path, src: &str) -> Result<(GaConfig, RunOutput)> {
    let file: RunFile = toml::from_str(src).map_err(|e| parse_error(path, src, e))?;
    let cfg = GaConfig {
        ga: file.ga,
        operators: file.operators,
        landscape: file.landscape,
        genome: file.genome,
        seed: file.seed,
    };
    cfg.validate().map_err(|e| validation_error(path, src, e))?;
    Ok((cfg, file.output))
}

/// Reads and validates a comparison config. Seeds default to 1..=10.
pub fn load_compare(path: &Path) -> Result<(CompareConfig, CompareOutput)> {
    let src = read(path)?;
    parse_compare(path, &src)
}

pub fn parse_compare(path: &Path, src: &str) -> Result<(CompareConfig, CompareOutput)> {
    let file: CompareFile = toml::from_str(src).map_err(|e| parse_error(path, src, e))?;
    let cfg = CompareConfig {
        landscape: file.landscape,
        genome: file.genome,
        classical: file.classical,
        biomimetic: file.biomimetic,
        budget: file.budget,
        seeds: file.seeds.unwrap_or_else(|| DEFAULT_SEEDS.to_vec()),
    };
    cfg.validate().map_err(|e| validation_error(path, src, e))?;
    Ok((cfg, file.output))
}

/// Parses `1,2,3` or `1..10` (inclusive).
pub fn parse_seed_list(s: &str) -> std::result::Result<Vec<u64>, String> {
    let s = s.trim();
    if let Some((a, b)) = s.split_once("..") {
        let a: u64 = a
            .trim()
            .parse()
            .map_err(|_| format!("bad seed range {s:?}"))?;
        let b: u64 = b
            .trim()
            .trim_start_matches('=')
            .parse()
            .map_err(|_| format!("bad seed range {s:?}"))?;
        if a > b {
            return Err(format!("empty seed range {s:?}"));
        }
        return Ok((a..=b).collect());
    }
    let seeds = s
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<u64>()
                .map_err(|_| format!("bad seed {t:?}"))
        })
        .collect::<std::result::Result<Vec<_>, _>>()?;
    if seeds.is_empty() {
        return Err("empty seed list".into());
    }
    Ok(seeds)
}
