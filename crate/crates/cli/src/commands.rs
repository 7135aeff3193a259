//! Subcommand implementations. Each writes its files under the output
//! directory and a short report to the given writer.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use bga_core::analysis::{
    allele_loss_probability, compare, fitness_walk, gain_probability, generations_to_fix_estimate,
    histogram, lag_correlation, Histogram, MIN_WALK,
};
use bga_core::engine::{random_search, FlatTemplate, Ga, GaParams, InitMode, RunTrace};
use bga_core::landscapes::{FlatLandscape, LandscapeSpec};
use bga_core::{CrossoverKind, FlatGenome, OperatorConfig};
use clap::{Args, ValueEnum};

use crate::config::{load_compare, load_run, parse_seed_list, DEFAULT_SEEDS};
use crate::error::{CliError, Result};
use crate::output::{histogram_svg, line_svg, write_atomic};

#[derive(Debug, Clone, Args, Default)]
pub struct SeedArgs {
    /// Single seed.
    #[arg(long, conflicts_with = "seeds")]
    pub seed: Option<u64>,
    /// Seed list, e.g. `1,2,3` or `1..10`.
    #[arg(long, value_parser = parse_seeds)]
    pub seeds: Option<SeedList>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeedList(pub Vec<u64>);

fn parse_seeds(s: &str) -> std::result::Result<SeedList, String> {
    parse_seed_list(s).map(SeedList)
}

impl SeedArgs {
    pub fn resolve(&self) -> Vec<u64> {
        match (&self.seed, &self.seeds) {
            (Some(s), _) => vec![*s],
            (None, Some(list)) => list.0.clone(),
            (None, None) => DEFAULT_SEEDS.to_vec(),
        }
    }
}

fn report(out: &mut dyn Write, text: &str) -> Result<()> {
    out.write_all(text.as_bytes())
        .map_err(|e| CliError::io("<stdout>", e))
}

#[derive(Debug, Clone, Args)]
pub struct RunArgs {
    #[arg(long)]
    pub config: PathBuf,
    /// Overrides the seed in the config file.
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
    /// Also write an SVG plot of the trace.
    #[arg(long)]
    pub plot: bool,
}

/// Runs one GA from a config file and writes its trace.
pub fn cmd_run(args: &RunArgs, out: &mut dyn Write) -> Result<RunTrace> {
    let (mut cfg, output) = load_run(&args.config)?;
    if let Some(seed) = args.seed {
        cfg.seed = seed;
    }
    let trace = bga_core::engine::run(&cfg)?;
    let name = output.trace.unwrap_or_else(|| "trace.csv".to_string());
    let path = args.out.join(&name);
    write_atomic(&path, &trace.to_csv())?;
    if args.plot {
        write_atomic(&path.with_extension("svg"), &trace_svg("run", &trace))?;
    }
    let last = trace.last().expect("traces have at least one row");
    report(
        out,
        &format!(
            "final best: {} (generation {}, {} evaluations)\ntrace: {}\n",
            last.best,
            last.generation,
            last.evaluations,
            path.display()
        ),
    )?;
    Ok(trace)
}

fn trace_svg(title: &str, trace: &RunTrace) -> String {
    let series = |f: fn(&bga_core::engine::TraceRow) -> f64| -> Vec<(f64, f64)> {
        trace
            .rows
            .iter()
            .map(|r| (r.generation as f64, f(r)))
            .collect()
    };
    line_svg(
        title,
        &[
            ("best", series(|r| r.best)),
            ("mean", series(|r| r.mean)),
            ("min", series(|r| r.min)),
        ],
    )
}

/// The OneMax experiment behind both figures.
#[derive(Debug, Clone, Args)]
pub struct OneMaxArgs {
    #[arg(long = "L", default_value_t = 100)]
    pub length: usize,
    #[arg(long, default_value_t = 100)]
    pub population: usize,
    #[arg(long, default_value_t = 50)]
    pub generations: usize,
    #[arg(long, default_value_t = 0.1)]
    pub survivor_fraction: f64,
    /// Mutation rate during the first `generations` generations.
    #[arg(long = "p-m", default_value_t = 0.0)]
    pub p_m: f64,
    #[arg(long, value_enum, default_value_t = CrossoverArg::UniformFlat)]
    pub crossover: CrossoverArg,
    /// Disable the elitist copy of the best individual.
    #[arg(long)]
    pub no_elitism: bool,
}

impl Default for OneMaxArgs {
    fn default() -> Self {
        Self {
            length: 100,
            population: 100,
            generations: 50,
            survivor_fraction: 0.1,
            p_m: 0.0,
            crossover: CrossoverArg::UniformFlat,
            no_elitism: false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum CrossoverArg {
    OnePointFlat,
    UniformFlat,
}

impl From<CrossoverArg> for CrossoverKind {
    fn from(c: CrossoverArg) -> Self {
        match c {
            CrossoverArg::OnePointFlat => CrossoverKind::OnePointFlat,
            CrossoverArg::UniformFlat => CrossoverKind::UniformFlat,
        }
    }
}

impl OneMaxArgs {
    fn params(&self) -> GaParams {
        GaParams {
            population_size: self.population,
            generations: self.generations,
            survivor_fraction: self.survivor_fraction,
            elitist: !self.no_elitism,
            init: InitMode::Random,
        }
    }

    fn operators(&self, p_m: f64) -> OperatorConfig {
        OperatorConfig {
            p_m,
            crossover: self.crossover.into(),
            ..OperatorConfig::default()
        }
    }

    fn validate(&self) -> Result<()> {
        if self.length == 0 {
            return Err(CliError::Validation("--L must be at least 1".into()));
        }
        self.params().validate()?;
        self.operators(self.p_m).validate()?;
        Ok(())
    }
}

#[derive(Debug, Clone, Args)]
pub struct Fig1Args {
    #[command(flatten)]
    pub onemax: OneMaxArgs,
    /// Random genomes in the baseline histogram.
    #[arg(long, default_value_t = 5000)]
    pub budget: usize,
    #[command(flatten)]
    pub seeds: SeedArgs,
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
    #[arg(long)]
    pub plot: bool,
}

/// Random-search baseline and final GA population for one seed.
#[derive(Debug, Clone, PartialEq)]
pub struct Fig1Replicate {
    pub seed: u64,
    pub random_samples: Vec<f64>,
    pub ga_final: Vec<f64>,
}

impl Fig1Replicate {
    pub fn random_range(&self) -> (f64, f64) {
        range(&self.random_samples)
    }

    pub fn ga_range(&self) -> (f64, f64) {
        range(&self.ga_final)
    }
}

fn range(xs: &[f64]) -> (f64, f64) {
    xs.iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), &v| {
            (a.min(v), b.max(v))
        })
}

pub fn fig1_replicate(args: &OneMaxArgs, budget: usize, seed: u64) -> Result<Fig1Replicate> {
    args.validate()?;
    let landscape = FlatLandscape::OneMax {
        length: args.length,
    };
    let template = FlatTemplate {
        length: args.length,
    };
    let search = random_search(budget, &landscape, &template, seed)?;
    let mut ga = Ga::new(
        args.params(),
        args.operators(args.p_m),
        &landscape,
        &template,
        seed,
    )?;
    ga.run()?;
    Ok(Fig1Replicate {
        seed,
        random_samples: search.samples,
        ga_final: ga.population().fitness.clone(),
    })
}

fn hist_points(h: &Histogram) -> Vec<(f64, usize)> {
    h.bins.iter().map(|(&k, &c)| (h.lower_edge(k), c)).collect()
}

/// Writes `fig1_random_seed{S}.csv` and `fig1_ga_seed{S}.csv` per seed.
pub fn cmd_fig1(args: &Fig1Args, out: &mut dyn Write) -> Result<Vec<Fig1Replicate>> {
    let mut results = Vec::new();
    let mut text = String::new();
    for seed in args.seeds.resolve() {
        let r = fig1_replicate(&args.onemax, args.budget, seed)?;
        let random = histogram(&r.random_samples, 1.0)?;
        let ga = histogram(&r.ga_final, 1.0)?;
        write_atomic(
            &args.out.join(format!("fig1_random_seed{seed}.csv")),
            &random.to_csv(),
        )?;
        write_atomic(
            &args.out.join(format!("fig1_ga_seed{seed}.csv")),
            &ga.to_csv(),
        )?;
        if args.plot {
            let svg = histogram_svg(
                &format!("OneMax L={}, seed {seed}", args.onemax.length),
                &[
                    ("random search", hist_points(&random)),
                    ("GA final population", hist_points(&ga)),
                ],
                1.0,
            );
            write_atomic(&args.out.join(format!("fig1_seed{seed}.svg")), &svg)?;
        }
        let (rlo, rhi) = r.random_range();
        let (glo, ghi) = r.ga_range();
        let _ = writeln!(
            text,
            "seed {seed}: random search [{rlo}, {rhi}] over {} samples; GA final population [{glo}, {ghi}]",
            r.random_samples.len()
        );
        results.push(r);
    }
    report(out, &text)?;
    Ok(results)
}

#[derive(Debug, Clone, Args)]
pub struct Fig2Args {
    #[command(flatten)]
    pub onemax: OneMaxArgs,
    /// Mutation rate after the initial generations.
    #[arg(long = "continue-p-m", default_value_t = 0.001)]
    pub continue_p_m: f64,
    /// Extra generations run at the continuation rate.
    #[arg(long = "continue-generations", default_value_t = 500)]
    pub continue_generations: usize,
    #[command(flatten)]
    pub seeds: SeedArgs,
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
    #[arg(long)]
    pub plot: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Fig2Row {
    pub generation: usize,
    pub p_m: f64,
    pub best: f64,
    pub mean: f64,
    pub fixed_zero_count: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Fig2Replicate {
    pub seed: u64,
    pub rows: Vec<Fig2Row>,
    /// Fixed-zero loci at the last generation before continuation.
    pub fixed_zero_at_end: usize,
    /// Continuation generations until the best individual is all ones.
    pub generations_to_fix: Option<usize>,
}

pub const FIG2_HEADER: &str = "generation,p_m,best,mean,fixed_zero_count";

impl Fig2Replicate {
    pub fn to_csv(&self) -> String {
        let mut s = String::from(FIG2_HEADER);
        s.push('\n');
        for r in &self.rows {
            let _ = writeln!(
                s,
                "{},{},{},{},{}",
                r.generation, r.p_m, r.best, r.mean, r.fixed_zero_count
            );
        }
        s
    }
}

pub fn fig2_replicate(args: &Fig2Args, seed: u64) -> Result<Fig2Replicate> {
    let o = &args.onemax;
    o.validate()?;
    let continued = o.operators(args.continue_p_m);
    continued.validate()?;
    let landscape = FlatLandscape::OneMax { length: o.length };
    let template = FlatTemplate { length: o.length };
    let mut ga = Ga::new(o.params(), o.operators(o.p_m), &landscape, &template, seed)?;
    ga.run()?;
    let fixed_zero_at_end = ga
        .trace()
        .last()
        .and_then(|r| r.fixed_zero_count)
        .unwrap_or(0);
    let first_phase = ga.trace().rows.len();
    ga.set_operators(continued)?;
    let target = o.length as f64;
    for _ in 0..args.continue_generations {
        ga.step()?;
    }
    let rows: Vec<Fig2Row> = ga
        .trace()
        .rows
        .iter()
        .enumerate()
        .map(|(i, r)| Fig2Row {
            generation: r.generation,
            p_m: if i < first_phase {
                o.p_m
            } else {
                args.continue_p_m
            },
            best: r.best,
            mean: r.mean,
            fixed_zero_count: r.fixed_zero_count.unwrap_or(0),
        })
        .collect();
    let generations_to_fix = rows[first_phase - 1..]
        .iter()
        .position(|r| r.best >= target);
    Ok(Fig2Replicate {
        seed,
        rows,
        fixed_zero_at_end,
        generations_to_fix,
    })
}

/// Closed-form values next to what a replicate observed.
pub fn fig2_predictions(args: &Fig2Args, r: &Fig2Replicate) -> Result<String> {
    let o = &args.onemax;
    let survivors = bga_core::engine::survivor_count(o.population, o.survivor_fraction);
    let p = args.continue_p_m;
    let mut s = String::from("quantity,n,loci,k,p_m,value\n");
    let _ = writeln!(
        s,
        "allele_loss_probability,{},{},,,{:e}",
        o.population,
        o.length,
        allele_loss_probability(o.population as u32, o.length as u32)
    );
    let _ = writeln!(
        s,
        "allele_loss_probability,{survivors},{},,,{}",
        o.length,
        allele_loss_probability(survivors as u32, o.length as u32)
    );
    let k = r.fixed_zero_at_end as u32;
    let _ = writeln!(s, "gain_probability,,,{k},{p},{}", gain_probability(k, p));
    let _ = writeln!(s, "gain_probability,,,4,{p},{}", gain_probability(4, p));
    if p > 0.0 {
        let _ = writeln!(
            s,
            "generations_to_fix_estimate,,,,{p},{}",
            generations_to_fix_estimate(p)?
        );
    }
    let _ = writeln!(s, "observed_fixed_zero_loci,,{},,,{k}", o.length);
    let fix = r
        .generations_to_fix
        .map(|g| g.to_string())
        .unwrap_or_default();
    let _ = writeln!(s, "observed_generations_to_fix,,,,{p},{fix}");
    Ok(s)
}

/// Writes `fig2_trajectory_seed{S}.csv` and `fig2_predictions_seed{S}.csv`.
pub fn cmd_fig2(args: &Fig2Args, out: &mut dyn Write) -> Result<Vec<Fig2Replicate>> {
    let mut results = Vec::new();
    let mut text = String::new();
    for seed in args.seeds.resolve() {
        let r = fig2_replicate(args, seed)?;
        write_atomic(
            &args.out.join(format!("fig2_trajectory_seed{seed}.csv")),
            &r.to_csv(),
        )?;
        write_atomic(
            &args.out.join(format!("fig2_predictions_seed{seed}.csv")),
            &fig2_predictions(args, &r)?,
        )?;
        if args.plot {
            let best: Vec<(f64, f64)> = r
                .rows
                .iter()
                .map(|x| (x.generation as f64, x.best))
                .collect();
            let zeros: Vec<(f64, f64)> = r
                .rows
                .iter()
                .map(|x| {
                    (
                        x.generation as f64,
                        args.onemax.length as f64 - x.fixed_zero_count as f64,
                    )
                })
                .collect();
            let svg = line_svg(
                &format!("OneMax convergence, seed {seed}"),
                &[("best", best), ("L - fixed-zero loci", zeros)],
            );
            write_atomic(&args.out.join(format!("fig2_seed{seed}.svg")), &svg)?;
        }
        let fix = r
            .generations_to_fix
            .map(|g| format!("{g} generations"))
            .unwrap_or_else(|| "not reached".into());
        let _ = writeln!(
            text,
            "seed {seed}: {} loci fixed at 0 after {} generations; all-ones after {fix} at p_m={}",
            r.fixed_zero_at_end, args.onemax.generations, args.continue_p_m
        );
        results.push(r);
    }
    report(out, &text)?;
    Ok(results)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum LandscapeArg {
    Onemax,
    SecondOrder,
    RuggedNk,
    RandomTable,
}

#[derive(Debug, Clone, Args)]
pub struct AutocorrArgs {
    #[arg(long, value_enum, default_value_t = LandscapeArg::Onemax)]
    pub landscape: LandscapeArg,
    #[arg(long = "L", default_value_t = 100)]
    pub length: usize,
    #[arg(long = "K", default_value_t = 4)]
    pub k: usize,
    /// Controller width for `second_order`; the target takes the rest of L.
    #[arg(long = "c", default_value_t = 10)]
    pub controller: usize,
    /// Seed of the landscape's random tables.
    #[arg(long, default_value_t = 0)]
    pub landscape_seed: u64,
    /// Seed of the walk.
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Walk length.
    #[arg(long = "T", default_value_t = 100_000)]
    pub steps: usize,
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
    #[arg(long)]
    pub plot: bool,
}

impl AutocorrArgs {
    pub fn spec(&self) -> Result<LandscapeSpec> {
        Ok(match self.landscape {
            LandscapeArg::Onemax => LandscapeSpec::Onemax {
                length: self.length,
            },
            LandscapeArg::SecondOrder => {
                if self.controller == 0 || self.controller >= self.length {
                    return Err(CliError::Validation(format!(
                        "--c must be in 1..{}, got {}",
                        self.length, self.controller
                    )));
                }
                LandscapeSpec::SecondOrder {
                    controller: self.controller,
                    target: self.length - self.controller,
                }
            }
            LandscapeArg::RuggedNk => LandscapeSpec::RuggedNk {
                length: self.length,
                k: self.k,
                seed: self.landscape_seed,
            },
            LandscapeArg::RandomTable => LandscapeSpec::RandomTable {
                length: self.length,
                seed: self.landscape_seed,
            },
        })
    }
}

/// Prints the lag-1 autocorrelation and writes `autocorr_walk.csv`.
pub fn cmd_autocorr(args: &AutocorrArgs, out: &mut dyn Write) -> Result<f64> {
    if args.steps < MIN_WALK {
        return Err(CliError::Validation(format!(
            "--T must be at least {MIN_WALK}, got {}",
            args.steps
        )));
    }
    let landscape = match args.spec()?.build()? {
        bga_core::Landscape::Flat(l) => l,
        bga_core::Landscape::Segmented(_) => unreachable!("only flat kinds are offered"),
    };
    let template = FlatTemplate {
        length: landscape.length(),
    };
    let walk = fitness_walk::<FlatGenome, _, _>(&landscape, &template, args.steps, args.seed);
    let corr = lag_correlation(&walk, 1)?;
    let mut csv = String::from("step,fitness\n");
    for (i, f) in walk.iter().enumerate() {
        let _ = writeln!(csv, "{i},{f}");
    }
    write_atomic(&args.out.join("autocorr_walk.csv"), &csv)?;
    if args.plot {
        let pts: Vec<(f64, f64)> = walk
            .iter()
            .enumerate()
            .take(2000)
            .map(|(i, &f)| (i as f64, f))
            .collect();
        write_atomic(
            &args.out.join("autocorr_walk.svg"),
            &line_svg("fitness along the first 2000 steps", &[("fitness", pts)]),
        )?;
    }
    let flag = if corr.degenerate {
        " (constant series)"
    } else {
        ""
    };
    report(out, &format!("rho(1) = {}{flag}\n", corr.rho))?;
    Ok(corr.rho)
}

#[derive(Debug, Clone, Args)]
pub struct CompareArgs {
    #[arg(long)]
    pub config: PathBuf,
    /// Overrides the seed list in the config file.
    #[command(flatten)]
    pub seeds: SeedArgs,
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
}

pub const REPLICATE_HEADER: &str = "method,seed,best,initial_best,evaluations";

/// Runs the three-way comparison and writes the report and per-replicate CSVs.
pub fn cmd_compare(
    args: &CompareArgs,
    out: &mut dyn Write,
) -> Result<bga_core::analysis::ComparisonReport> {
    let (mut cfg, output) = load_compare(&args.config)?;
    if args.seeds.seed.is_some() || args.seeds.seeds.is_some() {
        cfg.seeds = args.seeds.resolve();
    }
    let report_ = compare(&cfg)?;
    let report_path = args
        .out
        .join(output.report.unwrap_or_else(|| "compare.csv".into()));
    write_atomic(&report_path, &report_.to_csv())?;
    let mut reps = String::from(REPLICATE_HEADER);
    reps.push('\n');
    for row in &report_.rows {
        for r in &row.replicates {
            let _ = writeln!(
                reps,
                "{},{},{},{},{}",
                row.method, r.seed, r.best, r.initial_best, r.evaluations
            );
        }
    }
    let reps_path = args.out.join(
        output
            .replicates
            .unwrap_or_else(|| "compare_replicates.csv".into()),
    );
    write_atomic(&reps_path, &reps)?;
    report(out, &report_.summary())?;
    Ok(report_)
}
