//! Generational GA with truncation selection.
//!
//! Generation 0 is the initial population; each later generation is one
//! [`step`]. A run of `G` generations with `n` members therefore costs exactly
//! `n · G` evaluations, and trace row `t` reports `n · (t + 1)`.

use std::fmt::Write as _;
use std::io;

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::genome::{diversity, serialize, FlatGenome, IdWidth, Segment, SegmentedGenome};
use crate::landscapes::{Evaluate, Landscape, LandscapeSpec};
use crate::operators::{OperatorConfig, Variation};
use crate::{seeded_rng, Rng as SeededRng};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum InitMode {
    /// Independent uniform genomes.
    #[default]
    Random,
    /// One uniform genome cloned `n` times.
    Homogeneous,
}

/// Selection and population parameters.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GaParams {
    pub population_size: usize,
    /// Ignored in comparisons, where it follows from the budget.
    #[serde(default = "default_generations")]
    pub generations: usize,
    #[serde(default = "default_survivor_fraction")]
    pub survivor_fraction: f64,
    #[serde(default = "default_true")]
    pub elitist: bool,
    #[serde(default)]
    pub init: InitMode,
}

fn default_generations() -> usize {
    50
}

fn default_survivor_fraction() -> f64 {
    0.1
}

fn default_true() -> bool {
    true
}

impl Default for GaParams {
    fn default() -> Self {
        Self {
            population_size: 100,
            generations: default_generations(),
            survivor_fraction: default_survivor_fraction(),
            elitist: true,
            init: InitMode::Random,
        }
    }
}

impl GaParams {
    pub fn validate(&self) -> Result<()> {
        if self.population_size < 2 {
            return Err(Error::param(
                "population_size",
                format!("must be at least 2, got {}", self.population_size),
            ));
        }
        let tau = self.survivor_fraction;
        if !(tau > 0.0 && tau <= 1.0) {
            return Err(Error::param(
                "survivor_fraction",
                format!("must be in (0, 1], got {tau}"),
            ));
        }
        Ok(())
    }

    /// `max(2, ⌈τ·n⌉)`, capped at `n`.
    pub fn survivors(&self) -> usize {
        survivor_count(self.population_size, self.survivor_fraction)
    }

    /// Generations actually run; at least one.
    pub fn effective_generations(&self) -> usize {
        self.generations.max(1)
    }
}

/// `max(2, ⌈τ·n⌉)` capped at `n`. The product is nudged down by 1e-9 so
/// that values like `0.1 · 100` do not round up past the integer.
pub fn survivor_count(n: usize, tau: f64) -> usize {
    let raw = (tau * n as f64 - 1e-9).ceil().max(0.0) as usize;
    raw.max(2).min(n)
}

/// Shape of the genomes a run starts from.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SegmentedTemplate {
    /// Number of genes; ids are `0..genes`.
    pub genes: usize,
    pub payload_length: usize,
}

/// Draws initial genomes.
pub trait Template<G>: Sync {
    fn sample(&self, rng: &mut SeededRng) -> G;
}

/// Flat genomes of a fixed length.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FlatTemplate {
    pub length: usize,
}

impl Template<FlatGenome> for FlatTemplate {
    fn sample(&self, rng: &mut SeededRng) -> FlatGenome {
        FlatGenome::random(self.length, rng)
    }
}

/// Segmented genomes with genes `0..genes`, each with a uniform random
/// payload of fixed length.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StreamTemplate {
    pub width: IdWidth,
    pub genes: usize,
    pub payload_length: usize,
}

impl StreamTemplate {
    pub fn new(width: IdWidth, genes: usize, payload_length: usize) -> Result<Self> {
        if genes > width.id_count() {
            return Err(Error::param(
                "genes",
                format!("{genes} genes do not fit in {} ids", width.id_count()),
            ));
        }
        Ok(Self {
            width,
            genes,
            payload_length,
        })
    }
}

impl Template<SegmentedGenome> for StreamTemplate {
    fn sample(&self, rng: &mut SeededRng) -> SegmentedGenome {
        let segments: Vec<Segment> = (0..self.genes as u32)
            .map(|id| Segment::new(id, (0..self.payload_length).map(|_| rng.gen()).collect()))
            .collect();
        serialize(&segments, self.width).expect("template ids fit the width")
    }
}

/// Members and their fitness at one generation.
#[derive(Debug, Clone, PartialEq)]
pub struct Population<G> {
    pub members: Vec<G>,
    pub fitness: Vec<f64>,
    pub generation: usize,
}

impl<G> Population<G> {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Member indices by fitness, best first; ties go to the lower index.
    pub fn ranking(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.members.len()).collect();
        order.sort_by(|&a, &b| self.fitness[b].total_cmp(&self.fitness[a]).then(a.cmp(&b)));
        order
    }

    pub fn best_index(&self) -> usize {
        self.ranking()[0]
    }

    pub fn best_fitness(&self) -> f64 {
        self.fitness
            .iter()
            .copied()
            .fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn min_fitness(&self) -> f64 {
        self.fitness.iter().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn mean_fitness(&self) -> f64 {
        self.fitness.iter().sum::<f64>() / self.fitness.len() as f64
    }
}

/// Evaluates genomes in order; work may be spread over threads.
pub fn evaluate_all<G, F>(members: &[G], landscape: &F) -> Vec<f64>
where
    G: Sync,
    F: Evaluate<G>,
{
    members
        .par_iter()
        .with_min_len(32)
        .map(|g| landscape.evaluate(g))
        .collect()
}

/// Random mode draws `n` independent genomes; homogeneous mode clones one.
pub fn init_population<G, T>(params: &GaParams, template: &T, rng: &mut SeededRng) -> Vec<G>
where
    G: Clone,
    T: Template<G>,
{
    let n = params.population_size;
    match params.init {
        InitMode::Random => (0..n).map(|_| template.sample(rng)).collect(),
        InitMode::Homogeneous => vec![template.sample(rng); n],
    }
}

/// Produces the next generation's members from an evaluated population.
///
/// The top `max(2, ⌈τ·n⌉)` members survive. With elitism the best member is
/// copied unchanged into slot 0. Every other slot gets one crossover
/// offspring of two distinct survivors, then point mutation and the
/// configured macro-operators.
pub fn breed<G, R>(
    pop: &Population<G>,
    params: &GaParams,
    ops: &OperatorConfig,
    rng: &mut R,
) -> Result<Vec<G>>
where
    G: Variation,
    R: Rng + ?Sized,
{
    let n = params.population_size;
    let ranking = pop.ranking();
    let survivors: Vec<&G> = ranking[..params.survivors().min(pop.len())]
        .iter()
        .map(|&i| &pop.members[i])
        .collect();
    let s = survivors.len();
    let mut next = Vec::with_capacity(n);
    if params.elitist {
        next.push(pop.members[ranking[0]].clone());
    }
    while next.len() < n {
        let a = rng.gen_range(0..s);
        let mut b = rng.gen_range(0..s - 1);
        if b >= a {
            b += 1;
        }
        let child = survivors[a].crossover(survivors[b], ops, rng)?;
        let child = child.point_mutate(ops, rng).macro_mutate(ops, rng);
        next.push(child);
    }
    Ok(next)
}

/// One generation: breed, then evaluate the new members.
pub fn step<G, F, R>(
    pop: &Population<G>,
    params: &GaParams,
    ops: &OperatorConfig,
    landscape: &F,
    rng: &mut R,
) -> Result<Population<G>>
where
    G: Variation,
    F: Evaluate<G>,
    R: Rng + ?Sized,
{
    let members = breed(pop, params, ops, rng)?;
    let fitness = evaluate_all(&members, landscape);
    Ok(Population {
        members,
        fitness,
        generation: pop.generation + 1,
    })
}

/// Statistics for one generation.
#[derive(Debug, Clone, PartialEq)]
pub struct TraceRow {
    pub generation: usize,
    pub best: f64,
    pub mean: f64,
    pub min: f64,
    /// Loci at which every member is 0; flat genomes only.
    pub fixed_zero_count: Option<usize>,
    /// Mean pairwise Hamming distance; flat genomes only.
    pub diversity: Option<f64>,
    pub evaluations: u64,
}

/// Per-generation statistics of a run.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct RunTrace {
    pub rows: Vec<TraceRow>,
}

pub const TRACE_HEADER: &str = "generation,best,mean,min,fixed_zero_count,diversity,evaluations";

impl RunTrace {
    pub fn last(&self) -> Option<&TraceRow> {
        self.rows.last()
    }

    pub fn total_evaluations(&self) -> u64 {
        self.rows.last().map_or(0, |r| r.evaluations)
    }

    /// CSV text with header. Fields missing for segmented genomes are empty.
    pub fn to_csv(&self) -> String {
        let mut out = String::with_capacity(64 * (self.rows.len() + 1));
        out.push_str(TRACE_HEADER);
        out.push('\n');
        for r in &self.rows {
            let fixed = r
                .fixed_zero_count
                .map(|v| v.to_string())
                .unwrap_or_default();
            let div = r.diversity.map(|v| v.to_string()).unwrap_or_default();
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{}",
                r.generation, r.best, r.mean, r.min, fixed, div, r.evaluations
            );
        }
        out
    }

    pub fn write_csv<W: io::Write>(&self, mut w: W) -> io::Result<()> {
        w.write_all(self.to_csv().as_bytes())
    }
}

fn trace_row<G: Variation>(pop: &Population<G>, evaluations: u64) -> TraceRow {
    let flats: Option<Vec<FlatGenome>> = pop.members.iter().map(|g| g.as_flat().cloned()).collect();
    let (fixed_zero_count, diversity) = match flats {
        Some(f) => (
            Some(crate::analysis::fixed_zero_loci(&f)),
            diversity(&f).ok(),
        ),
        None => (None, None),
    };
    TraceRow {
        generation: pop.generation,
        best: pop.best_fitness(),
        mean: pop.mean_fitness(),
        min: pop.min_fitness(),
        fixed_zero_count,
        diversity,
        evaluations,
    }
}

/// A running GA: the current population, its random source and the trace
/// so far. Operators may be swapped between generations.
pub struct Ga<'a, G, F> {
    params: GaParams,
    ops: OperatorConfig,
    landscape: &'a F,
    rng: SeededRng,
    population: Population<G>,
    trace: RunTrace,
    evaluations: u64,
}

impl<'a, G, F> Ga<'a, G, F>
where
    G: Variation,
    F: Evaluate<G>,
{
    /// Initializes and evaluates generation 0.
    pub fn new<T: Template<G>>(
        params: GaParams,
        ops: OperatorConfig,
        landscape: &'a F,
        template: &T,
        seed: u64,
    ) -> Result<Self> {
        params.validate()?;
        ops.validate()?;
        G::check_crossover(ops.crossover)?;
        let mut rng = seeded_rng(seed);
        let members = init_population(&params, template, &mut rng);
        Ok(Self::from_members(params, ops, landscape, members, rng))
    }

    /// Starts from given members, which become generation 0.
    pub fn from_members(
        params: GaParams,
        ops: OperatorConfig,
        landscape: &'a F,
        members: Vec<G>,
        rng: SeededRng,
    ) -> Self {
        let fitness = evaluate_all(&members, landscape);
        let evaluations = members.len() as u64;
        let population = Population {
            members,
            fitness,
            generation: 0,
        };
        let trace = RunTrace {
            rows: vec![trace_row(&population, evaluations)],
        };
        Self {
            params,
            ops,
            landscape,
            rng,
            population,
            trace,
            evaluations,
        }
    }

    pub fn step(&mut self) -> Result<()> {
        let next = step(
            &self.population,
            &self.params,
            &self.ops,
            self.landscape,
            &mut self.rng,
        )?;
        self.evaluations += next.len() as u64;
        self.trace.rows.push(trace_row(&next, self.evaluations));
        self.population = next;
        Ok(())
    }

    /// Runs until the population has `generations` generations in total.
    pub fn run(&mut self) -> Result<()> {
        while self.population.generation + 1 < self.params.effective_generations() {
            self.step()?;
        }
        Ok(())
    }

    /// Steps at most `max_steps` times, stopping early once `done` holds for
    /// the current population. Returns the number of steps taken.
    pub fn run_until(
        &mut self,
        max_steps: usize,
        mut done: impl FnMut(&Population<G>) -> bool,
    ) -> Result<usize> {
        let mut taken = 0;
        while taken < max_steps && !done(&self.population) {
            self.step()?;
            taken += 1;
        }
        Ok(taken)
    }

    pub fn set_operators(&mut self, ops: OperatorConfig) -> Result<()> {
        ops.validate()?;
        G::check_crossover(ops.crossover)?;
        self.ops = ops;
        Ok(())
    }

    pub fn population(&self) -> &Population<G> {
        &self.population
    }

    pub fn trace(&self) -> &RunTrace {
        &self.trace
    }

    pub fn into_trace(self) -> RunTrace {
        self.trace
    }

    pub fn evaluations(&self) -> u64 {
        self.evaluations
    }

    pub fn params(&self) -> &GaParams {
        &self.params
    }
}

/// Complete description of one run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GaConfig {
    pub ga: GaParams,
    #[serde(default)]
    pub operators: OperatorConfig,
    pub landscape: LandscapeSpec,
    /// Required when the landscape is over segmented genomes.
    #[serde(default)]
    pub genome: Option<SegmentedTemplate>,
    #[serde(default)]
    pub seed: u64,
}

/// A validated config with its landscape built.
pub enum Prepared {
    Flat {
        landscape: crate::landscapes::FlatLandscape,
        template: FlatTemplate,
    },
    Segmented {
        landscape: crate::landscapes::SegmentedSum,
        template: StreamTemplate,
    },
}

impl GaConfig {
    pub fn prepare(&self) -> Result<Prepared> {
        self.ga.validate()?;
        self.operators.validate()?;
        match self.landscape.build()? {
            Landscape::Flat(landscape) => {
                FlatGenome::check_crossover(self.operators.crossover)?;
                let template = FlatTemplate {
                    length: landscape.length(),
                };
                Ok(Prepared::Flat {
                    landscape,
                    template,
                })
            }
            Landscape::Segmented(landscape) => {
                SegmentedGenome::check_crossover(self.operators.crossover)?;
                if self.operators.id_width != landscape.width().get() {
                    return Err(Error::param(
                        "id_width",
                        format!(
                            "operators use id width {} but the landscape uses {}",
                            self.operators.id_width,
                            landscape.width().get()
                        ),
                    ));
                }
                let spec = self.genome.as_ref().ok_or(Error::param(
                    "genome",
                    "segmented landscapes need a genome template",
                ))?;
                let template =
                    StreamTemplate::new(landscape.width(), spec.genes, spec.payload_length)?;
                Ok(Prepared::Segmented {
                    landscape,
                    template,
                })
            }
        }
    }

    pub fn validate(&self) -> Result<()> {
        self.prepare().map(|_| ())
    }
}

/// Runs a config to completion; deterministic given `cfg.seed`.
pub fn run(cfg: &GaConfig) -> Result<RunTrace> {
    match cfg.prepare()? {
        Prepared::Flat {
            landscape,
            template,
        } => run_with(cfg, &landscape, &template),
        Prepared::Segmented {
            landscape,
            template,
        } => run_with(cfg, &landscape, &template),
    }
}

fn run_with<G, F, T>(cfg: &GaConfig, landscape: &F, template: &T) -> Result<RunTrace>
where
    G: Variation,
    F: Evaluate<G>,
    T: Template<G>,
{
    let mut ga = Ga::new(
        cfg.ga.clone(),
        cfg.operators.clone(),
        landscape,
        template,
        cfg.seed,
    )?;
    ga.run()?;
    Ok(ga.into_trace())
}

/// Outcome of budgeted random search.
#[derive(Debug, Clone, PartialEq)]
pub struct SearchResult<G> {
    pub best_fitness: f64,
    pub best: G,
    /// Fitness of every sample, in draw order.
    pub samples: Vec<f64>,
}

/// Evaluates exactly `budget` independent genomes drawn from `template`.
pub fn random_search<G, F, T>(
    budget: usize,
    landscape: &F,
    template: &T,
    seed: u64,
) -> Result<SearchResult<G>>
where
    G: Send + Sync,
    F: Evaluate<G>,
    T: Template<G>,
{
    if budget == 0 {
        return Err(Error::param("budget", "must be at least 1"));
    }
    let mut rng = seeded_rng(seed);
    let genomes: Vec<G> = (0..budget).map(|_| template.sample(&mut rng)).collect();
    let samples = evaluate_all(&genomes, landscape);
    let best_idx = samples
        .iter()
        .enumerate()
        .fold(0, |bi, (i, &v)| if v > samples[bi] { i } else { bi });
    let best_fitness = samples[best_idx];
    let best = genomes.into_iter().nth(best_idx).expect("budget >= 1");
    Ok(SearchResult {
        best_fitness,
        best,
        samples,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::landscapes::FlatLandscape;
    use crate::operators::CrossoverKind;

    fn onemax(length: usize) -> FlatLandscape {
        FlatLandscape::OneMax { length }
    }

    #[test]
    fn survivor_count_rule() {
        assert_eq!(survivor_count(100, 0.1), 10);
        assert_eq!(survivor_count(10, 0.1), 2);
        assert_eq!(survivor_count(10, 0.7), 7);
        assert_eq!(survivor_count(3, 1.0), 3);
        assert_eq!(survivor_count(2, 0.01), 2);
        assert_eq!(survivor_count(101, 0.1), 11);
    }

    #[test]
    fn params_validation_names_field() {
        let p = GaParams {
            survivor_fraction: 0.0,
            ..GaParams::default()
        };
        assert!(matches!(
            p.validate(),
            Err(Error::InvalidParameter {
                field: "survivor_fraction",
                ..
            })
        ));
        let p = GaParams {
            population_size: 1,
            ..GaParams::default()
        };
        assert!(p.validate().is_err());
    }

    #[test]
    fn homogeneous_init_has_zero_diversity() {
        let params = GaParams {
            init: InitMode::Homogeneous,
            population_size: 30,
            ..GaParams::default()
        };
        let pop: Vec<FlatGenome> =
            init_population(&params, &FlatTemplate { length: 40 }, &mut seeded_rng(1));
        assert_eq!(diversity(&pop).unwrap(), 0.0);
    }

    #[test]
    fn random_init_diversity_near_half_length() {
        let params = GaParams::default();
        let pop: Vec<FlatGenome> =
            init_population(&params, &FlatTemplate { length: 100 }, &mut seeded_rng(2));
        let d = diversity(&pop).unwrap();
        assert!((d - 50.0).abs() <= 3.0, "{d}");
        let again: Vec<FlatGenome> =
            init_population(&params, &FlatTemplate { length: 100 }, &mut seeded_rng(2));
        assert_eq!(pop, again);
    }

    #[test]
    fn all_ones_is_a_fixpoint_without_mutation() {
        let l = onemax(20);
        let members = vec![FlatGenome::ones(20); 10];
        let params = GaParams {
            population_size: 10,
            ..GaParams::default()
        };
        let mut ga = Ga::from_members(
            params,
            OperatorConfig::default(),
            &l,
            members.clone(),
            seeded_rng(3),
        );
        ga.step().unwrap();
        assert_eq!(ga.population().members, members);
    }

    #[test]
    fn breed_uses_exactly_the_top_survivors() {
        // Survivors are the ten ones-heavy genomes; with p_m = 0 every
        // offspring locus comes from one of them.
        let n = 100;
        let mut members: Vec<FlatGenome> = (0..n).map(|_| FlatGenome::zeros(8)).collect();
        for (k, m) in members.iter_mut().enumerate().take(10) {
            *m = FlatGenome::ones(8).with_flipped(k % 8);
        }
        let fitness = members.iter().map(|g| g.count_ones() as f64).collect();
        let pop = Population {
            members,
            fitness,
            generation: 0,
        };
        let params = GaParams::default();
        assert_eq!(params.survivors(), 10);
        let next = breed(
            &pop,
            &params,
            &OperatorConfig::default(),
            &mut seeded_rng(4),
        )
        .unwrap();
        assert_eq!(next.len(), n);
        assert!(next.iter().all(|g| g.count_ones() >= 6));
    }

    #[test]
    fn ranking_breaks_ties_by_index() {
        let pop = Population {
            members: vec![(); 4],
            fitness: vec![1.0, 3.0, 3.0, 0.5],
            generation: 0,
        };
        assert_eq!(pop.ranking(), vec![1, 2, 0, 3]);
    }

    #[test]
    fn trace_accounting_and_monotonic_best() {
        let cfg = GaConfig {
            ga: GaParams {
                population_size: 20,
                generations: 15,
                ..GaParams::default()
            },
            operators: OperatorConfig::with_mutation(0.05),
            landscape: LandscapeSpec::RuggedNk {
                length: 24,
                k: 4,
                seed: 7,
            },
            genome: None,
            seed: 11,
        };
        let trace = run(&cfg).unwrap();
        assert_eq!(trace.rows.len(), 15);
        for (t, row) in trace.rows.iter().enumerate() {
            assert_eq!(row.generation, t);
            assert_eq!(row.evaluations, 20 * (t as u64 + 1));
        }
        for w in trace.rows.windows(2) {
            assert!(w[1].best >= w[0].best);
        }
        assert_eq!(run(&cfg).unwrap(), trace);
    }

    #[test]
    fn zero_generations_still_records_one_row() {
        let cfg = GaConfig {
            ga: GaParams {
                generations: 0,
                population_size: 5,
                ..GaParams::default()
            },
            operators: OperatorConfig::default(),
            landscape: LandscapeSpec::Onemax { length: 10 },
            genome: None,
            seed: 0,
        };
        let trace = run(&cfg).unwrap();
        assert_eq!(trace.rows.len(), 1);
        assert_eq!(trace.total_evaluations(), 5);
    }

    #[test]
    fn segmented_runs_need_matching_config() {
        let mut cfg = GaConfig {
            ga: GaParams {
                population_size: 10,
                generations: 5,
                ..GaParams::default()
            },
            operators: OperatorConfig {
                crossover: CrossoverKind::SegmentAligned,
                id_width: 2,
                p_m: 0.02,
                p_translocation: 0.2,
                p_duplication: 0.1,
                ..OperatorConfig::default()
            },
            landscape: LandscapeSpec::SegmentedSum {
                id_width: 2,
                weights: vec![1.0, 2.0, 3.0, 4.0],
            },
            genome: None,
            seed: 1,
        };
        assert!(matches!(
            run(&cfg),
            Err(Error::InvalidParameter {
                field: "genome",
                ..
            })
        ));
        cfg.genome = Some(SegmentedTemplate {
            genes: 4,
            payload_length: 6,
        });
        let trace = run(&cfg).unwrap();
        assert_eq!(trace.rows.len(), 5);
        assert!(trace.rows[0].diversity.is_none());
        assert!(trace.to_csv().lines().nth(1).unwrap().contains(",,"));
        cfg.operators.crossover = CrossoverKind::OnePointFlat;
        assert!(run(&cfg).is_err());
    }

    #[test]
    fn random_search_single_draw() {
        let l = onemax(30);
        let r = random_search(1, &l, &FlatTemplate { length: 30 }, 5).unwrap();
        assert_eq!(r.samples.len(), 1);
        assert_eq!(r.best_fitness, r.samples[0]);
        assert_eq!(r.best.count_ones() as f64, r.best_fitness);
        assert!(random_search::<FlatGenome, _, _>(0, &l, &FlatTemplate { length: 30 }, 5).is_err());
    }

    #[test]
    fn csv_header_and_rows() {
        let cfg = GaConfig {
            ga: GaParams {
                population_size: 4,
                generations: 3,
                ..GaParams::default()
            },
            operators: OperatorConfig::default(),
            landscape: LandscapeSpec::Onemax { length: 8 },
            genome: None,
            seed: 2,
        };
        let csv = run(&cfg).unwrap().to_csv();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], TRACE_HEADER);
        assert_eq!(lines.len(), 4);
        assert!(lines[3].ends_with(",12"));
    }
}
