//! Command-line harness: config loading, experiment commands and output files.

pub mod commands;
pub mod config;
pub mod error;
pub mod output;

pub use error::{CliError, Result};
