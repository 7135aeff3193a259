use std::io::{self, Write};
use std::process::ExitCode;

use bga_cli::commands::{
    cmd_autocorr, cmd_compare, cmd_fig1, cmd_fig2, cmd_run, AutocorrArgs, CompareArgs, Fig1Args,
    Fig2Args, RunArgs,
};
use bga_cli::CliError;
use clap::{Parser, Subcommand};

/// Genetic-algorithm laboratory: flat and segmented genomes on tunable landscapes.
#[derive(Debug, Parser)]
#[command(name = "bga", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run one GA from a config file and write its trace CSV.
    Run(RunArgs),
    /// Random-search histogram vs. the final GA population on OneMax.
    Fig1(Fig1Args),
    /// Fixation without mutation, then recovery with a small mutation rate.
    Fig2(Fig2Args),
    /// Lag-1 fitness autocorrelation along a random walk.
    Autocorr(AutocorrArgs),
    /// Classical GA, biomimetic GA and random search at equal budget.
    Compare(CompareArgs),
}

fn dispatch(cmd: &Command, out: &mut dyn Write) -> Result<(), CliError> {
    match cmd {
        Command::Run(a) => cmd_run(a, out).map(drop),
        Command::Fig1(a) => cmd_fig1(a, out).map(drop),
        Command::Fig2(a) => cmd_fig2(a, out).map(drop),
        Command::Autocorr(a) => cmd_autocorr(a, out).map(drop),
        Command::Compare(a) => cmd_compare(a, out).map(drop),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let stdout = io::stdout();
    match dispatch(&cli.command, &mut stdout.lock()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
