//! Statistics over runs, the closed-form allele predictors, fitness
//! autocorrelation, and the classical / biomimetic / random-search
//! comparison.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::engine::{random_search, Ga, GaParams, InitMode, Prepared, SegmentedTemplate, Template};
use crate::error::{Error, Result};
use crate::genome::{FlatGenome, SegmentedGenome, Symbol};
use crate::landscapes::{Evaluate, FlatLandscape, LandscapeSpec};
use crate::operators::{CrossoverKind, OperatorConfig, Variation};
use crate::{seeded_rng, GaConfig};

/// Counts per half-open bin `[k·w, (k+1)·w)`, keyed by `k`.
#[derive(Debug, Clone, PartialEq)]
pub struct Histogram {
    pub bin_width: f64,
    pub bins: BTreeMap<i64, usize>,
}

impl Histogram {
    pub fn total(&self) -> usize {
        self.bins.values().sum()
    }

    pub fn lower_edge(&self, k: i64) -> f64 {
        k as f64 * self.bin_width
    }

    /// Lower edge of the lowest and highest occupied bins.
    pub fn range(&self) -> (f64, f64) {
        let lo = *self.bins.keys().next().expect("histograms are non-empty");
        let hi = *self
            .bins
            .keys()
            .next_back()
            .expect("histograms are non-empty");
        (self.lower_edge(lo), self.lower_edge(hi))
    }

    /// `bin_lower,count` CSV with header.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("bin_lower,count\n");
        for (&k, &c) in &self.bins {
            let _ = writeln!(out, "{},{}", self.lower_edge(k), c);
        }
        out
    }
}

pub fn histogram(samples: &[f64], bin_width: f64) -> Result<Histogram> {
    if !(bin_width > 0.0 && bin_width.is_finite()) {
        return Err(Error::param(
            "bin_width",
            format!("must be positive, got {bin_width}"),
        ));
    }
    if samples.is_empty() {
        return Err(Error::EmptySample);
    }
    let mut bins = BTreeMap::new();
    for &x in samples {
        if !x.is_finite() {
            return Err(Error::param("samples", format!("non-finite value {x}")));
        }
        *bins.entry((x / bin_width).floor() as i64).or_insert(0) += 1;
    }
    Ok(Histogram { bin_width, bins })
}

/// Loci at which every member holds 0.
pub fn fixed_zero_loci(pop: &[FlatGenome]) -> usize {
    let Some(first) = pop.first() else {
        return 0;
    };
    (0..first.len())
        .filter(|&i| pop.iter().all(|g| !g.bits()[i]))
        .count()
}

/// Probability that at least one of `loci` loci is 0 in all of `n` uniform
/// random individuals: `1 − (1 − 2^−n)^L`, evaluated through `ln_1p` and
/// `exp_m1` so that values near 1e-29 survive.
pub fn allele_loss_probability(n: u32, loci: u32) -> f64 {
    let p = (-(n as f64)).exp2();
    -(loci as f64 * (-p).ln_1p()).exp_m1()
}

/// Probability that an individual mutates at least one of `k` stuck loci:
/// `1 − (1 − p_m)^k`.
pub fn gain_probability(k: u32, p_m: f64) -> f64 {
    if k == 0 {
        return 0.0;
    }
    -(k as f64 * (-p_m).ln_1p()).exp_m1()
}

/// Heuristic generation count to switch four stuck loci with ten
/// reproducing individuals: `1 / (10 · p_m)`.
pub fn generations_to_fix_estimate(p_m: f64) -> Result<f64> {
    if !(p_m > 0.0 && p_m <= 1.0) {
        return Err(Error::param("p_m", format!("must be in (0, 1], got {p_m}")));
    }
    Ok(1.0 / (10.0 * p_m))
}

/// Generations an elitist OneMax GA needs to bring the best individual to
/// all ones, starting from clones of a genome with `stuck` zero loci.
/// `None` if `max_generations` is not enough.
pub fn time_to_fix(
    stuck: usize,
    length: usize,
    params: &GaParams,
    crossover: CrossoverKind,
    p_m: f64,
    seed: u64,
    max_generations: usize,
) -> Result<Option<usize>> {
    if stuck > length {
        return Err(Error::param(
            "stuck",
            format!("{stuck} exceeds length {length}"),
        ));
    }
    params.validate()?;
    let landscape = FlatLandscape::OneMax { length };
    let start = FlatGenome::new((0..length).map(|i| i >= stuck).collect());
    let ops = OperatorConfig {
        p_m,
        crossover,
        ..OperatorConfig::default()
    };
    let mut ga = Ga::from_members(
        GaParams {
            elitist: true,
            ..params.clone()
        },
        ops,
        &landscape,
        vec![start; params.population_size],
        seeded_rng(seed),
    );
    let target = length as f64;
    let steps = ga.run_until(max_generations, |p| p.best_fitness() >= target)?;
    Ok((ga.population().best_fitness() >= target).then_some(steps))
}

/// Genomes that support an elementary-mutation random walk.
pub trait Walk: Clone {
    /// Flips one uniformly chosen bit in place. Signals are left alone.
    fn flip_random<R: Rng + ?Sized>(&mut self, rng: &mut R);
}

impl Walk for FlatGenome {
    fn flip_random<R: Rng + ?Sized>(&mut self, rng: &mut R) {
        if self.is_empty() {
            return;
        }
        let i = rng.gen_range(0..self.len());
        let bits = self.bits_mut();
        bits[i] = !bits[i];
    }
}

impl Walk for SegmentedGenome {
    fn flip_random<R: Rng + ?Sized>(&mut self, rng: &mut R) {
        let bits: Vec<usize> = self
            .symbols()
            .iter()
            .enumerate()
            .filter(|(_, s)| **s != Symbol::Sig)
            .map(|(i, _)| i)
            .collect();
        if bits.is_empty() {
            return;
        }
        let i = bits[rng.gen_range(0..bits.len())];
        let s = &mut self.symbols_mut()[i];
        *s = if *s == Symbol::One {
            Symbol::Zero
        } else {
            Symbol::One
        };
    }
}

/// Smallest walk accepted by [`autocorrelation`].
pub const MIN_WALK: usize = 1000;

/// Fitness along a `steps`-step single-flip random walk from a random start;
/// `steps + 1` values.
pub fn fitness_walk<G, F, T>(landscape: &F, template: &T, steps: usize, seed: u64) -> Vec<f64>
where
    G: Walk,
    F: Evaluate<G>,
    T: Template<G>,
{
    let mut rng = seeded_rng(seed);
    let mut g = template.sample(&mut rng);
    let mut series = Vec::with_capacity(steps + 1);
    series.push(landscape.evaluate(&g));
    for _ in 0..steps {
        g.flip_random(&mut rng);
        series.push(landscape.evaluate(&g));
    }
    series
}

/// Lag correlation of a series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Correlation {
    pub rho: f64,
    /// The series had zero variance; `rho` is reported as 1.
    pub degenerate: bool,
}

/// Pearson correlation between `series[..len-lag]` and `series[lag..]`.
pub fn lag_correlation(series: &[f64], lag: usize) -> Result<Correlation> {
    if series.len() < lag + 2 {
        return Err(Error::param(
            "series",
            format!("need at least {} values", lag + 2),
        ));
    }
    let x = &series[..series.len() - lag];
    let y = &series[lag..];
    let m = x.len() as f64;
    let mx = x.iter().sum::<f64>() / m;
    let my = y.iter().sum::<f64>() / m;
    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for (a, b) in x.iter().zip(y) {
        let (da, db) = (a - mx, b - my);
        sxy += da * db;
        sxx += da * da;
        syy += db * db;
    }
    if sxx == 0.0 || syy == 0.0 {
        return Ok(Correlation {
            rho: 1.0,
            degenerate: true,
        });
    }
    Ok(Correlation {
        rho: (sxy / (sxx * syy).sqrt()).clamp(-1.0, 1.0),
        degenerate: false,
    })
}

/// Lag-1 fitness autocorrelation along a random walk of `steps` flips.
pub fn autocorrelation<G, F, T>(
    landscape: &F,
    template: &T,
    steps: usize,
    seed: u64,
) -> Result<Correlation>
where
    G: Walk,
    F: Evaluate<G>,
    T: Template<G>,
{
    if steps < MIN_WALK {
        return Err(Error::param(
            "walk_length",
            format!("must be at least {MIN_WALK}, got {steps}"),
        ));
    }
    lag_correlation(&fitness_walk(landscape, template, steps, seed), 1)
}

/// GA settings for one side of a comparison.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VariantConfig {
    pub ga: GaParams,
    #[serde(default)]
    pub operators: OperatorConfig,
}

/// Classical GA vs biomimetic GA vs random search on one landscape.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CompareConfig {
    pub landscape: LandscapeSpec,
    #[serde(default)]
    pub genome: Option<SegmentedTemplate>,
    pub classical: VariantConfig,
    pub biomimetic: VariantConfig,
    /// Evaluations per method per replicate.
    pub budget: usize,
    pub seeds: Vec<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Method {
    Classical,
    Biomimetic,
    RandomSearch,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Classical => "classical",
            Method::Biomimetic => "biomimetic",
            Method::RandomSearch => "random_search",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Replicate {
    pub seed: u64,
    pub best: f64,
    /// Best fitness of generation 0 (the first sample for random search).
    pub initial_best: f64,
    pub evaluations: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonRow {
    pub method: Method,
    pub budget: usize,
    pub replicates: Vec<Replicate>,
}

impl ComparisonRow {
    pub fn best(&self) -> f64 {
        self.replicates
            .iter()
            .map(|r| r.best)
            .fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn mean_best(&self) -> f64 {
        self.replicates.iter().map(|r| r.best).sum::<f64>() / self.replicates.len() as f64
    }

    pub fn seeds(&self) -> Vec<u64> {
        self.replicates.iter().map(|r| r.seed).collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonReport {
    pub rows: Vec<ComparisonRow>,
}

pub const REPORT_HEADER: &str = "method,budget,best,mean_best,replicates,seeds";

impl ComparisonReport {
    pub fn row(&self, method: Method) -> Option<&ComparisonRow> {
        self.rows.iter().find(|r| r.method == method)
    }

    /// Methods by mean-best, highest first.
    pub fn ordering(&self) -> Vec<Method> {
        let mut rows: Vec<&ComparisonRow> = self.rows.iter().collect();
        rows.sort_by(|a, b| {
            b.mean_best()
                .total_cmp(&a.mean_best())
                .then(a.method.cmp(&b.method))
        });
        rows.into_iter().map(|r| r.method).collect()
    }

    /// Seeds are joined with `;`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from(REPORT_HEADER);
        out.push('\n');
        for r in &self.rows {
            let seeds: Vec<String> = r.seeds().iter().map(u64::to_string).collect();
            let _ = writeln!(
                out,
                "{},{},{},{},{},{}",
                r.method,
                r.budget,
                r.best(),
                r.mean_best(),
                r.replicates.len(),
                seeds.join(";")
            );
        }
        out
    }

    /// Plain-text table plus the observed ordering.
    pub fn summary(&self) -> String {
        let mut out = format!(
            "{:<14} {:>8} {:>14} {:>14} {:>10}\n",
            "method", "budget", "best", "mean_best", "replicates"
        );
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{:<14} {:>8} {:>14.6} {:>14.6} {:>10}",
                r.method.to_string(),
                r.budget,
                r.best(),
                r.mean_best(),
                r.replicates.len()
            );
        }
        let order: Vec<String> = self.ordering().iter().map(Method::to_string).collect();
        let _ = writeln!(out, "observed ordering by mean_best: {}", order.join(" > "));
        out
    }
}

impl CompareConfig {
    fn variant(&self, v: &VariantConfig, init: InitMode) -> Result<GaConfig> {
        if self.budget == 0 || !self.budget.is_multiple_of(v.ga.population_size.max(1)) {
            return Err(Error::BudgetMismatch {
                budget: self.budget,
                population: v.ga.population_size,
            });
        }
        Ok(GaConfig {
            ga: GaParams {
                generations: self.budget / v.ga.population_size,
                init,
                ..v.ga.clone()
            },
            operators: v.operators.clone(),
            landscape: self.landscape.clone(),
            genome: self.genome.clone(),
            seed: 0,
        })
    }

    pub fn validate(&self) -> Result<()> {
        if self.seeds.is_empty() {
            return Err(Error::param("seeds", "at least one seed is required"));
        }
        self.variant(&self.classical, InitMode::Random)?
            .validate()?;
        self.variant(&self.biomimetic, InitMode::Homogeneous)?
            .validate()
    }
}

/// Runs both GA variants and random search for every seed, each consuming
/// exactly `budget` evaluations. The classical GA always starts from a random
/// population and the biomimetic GA from a homogeneous one.
pub fn compare(cfg: &CompareConfig) -> Result<ComparisonReport> {
    cfg.validate()?;
    let classical = cfg.variant(&cfg.classical, InitMode::Random)?;
    let biomimetic = cfg.variant(&cfg.biomimetic, InitMode::Homogeneous)?;
    match classical.prepare()? {
        Prepared::Flat {
            landscape,
            template,
        } => compare_with::<FlatGenome, _, _>(cfg, &classical, &biomimetic, &landscape, &template),
        Prepared::Segmented {
            landscape,
            template,
        } => compare_with::<SegmentedGenome, _, _>(
            cfg,
            &classical,
            &biomimetic,
            &landscape,
            &template,
        ),
    }
}

fn compare_with<G, F, T>(
    cfg: &CompareConfig,
    classical: &GaConfig,
    biomimetic: &GaConfig,
    landscape: &F,
    template: &T,
) -> Result<ComparisonReport>
where
    G: Variation,
    F: Evaluate<G>,
    T: Template<G>,
{
    let ga_row = |method: Method, gc: &GaConfig| -> Result<ComparisonRow> {
        let replicates = cfg
            .seeds
            .par_iter()
            .map(|&seed| {
                let mut ga = Ga::new(
                    gc.ga.clone(),
                    gc.operators.clone(),
                    landscape,
                    template,
                    seed,
                )?;
                ga.run()?;
                let trace = ga.trace();
                let best = trace
                    .rows
                    .iter()
                    .map(|r| r.best)
                    .fold(f64::NEG_INFINITY, f64::max);
                Ok(Replicate {
                    seed,
                    best,
                    initial_best: trace.rows[0].best,
                    evaluations: trace.total_evaluations(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ComparisonRow {
            method,
            budget: cfg.budget,
            replicates,
        })
    };
    let search = cfg
        .seeds
        .par_iter()
        .map(|&seed| {
            let r = random_search(cfg.budget, landscape, template, seed)?;
            Ok(Replicate {
                seed,
                best: r.best_fitness,
                initial_best: r.samples[0],
                evaluations: r.samples.len() as u64,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ComparisonReport {
        rows: vec![
            ga_row(Method::Classical, classical)?,
            ga_row(Method::Biomimetic, biomimetic)?,
            ComparisonRow {
                method: Method::RandomSearch,
                budget: cfg.budget,
                replicates: search,
            },
        ],
    })
}
