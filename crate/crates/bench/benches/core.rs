use bga_core::engine::{init_population, step, FlatTemplate, GaParams, InitMode, Population};
use bga_core::genome::{parse, serialize, Segment};
use bga_core::landscapes::{Evaluate, FlatLandscape, NkLandscape, RandomTable};
use bga_core::{seeded_rng, CrossoverKind, FlatGenome, IdWidth, OperatorConfig};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

fn nk_evaluate(c: &mut Criterion) {
    let mut group = c.benchmark_group("nk_evaluate");
    let mut rng = seeded_rng(1);
    for k in [0usize, 4, 8, 16] {
        let nk = NkLandscape::new(64, k, 7).unwrap();
        let g = FlatGenome::random(64, &mut rng);
        group.bench_with_input(BenchmarkId::from_parameter(k), &g, |b, g| {
            b.iter(|| nk.evaluate(black_box(g)))
        });
    }
    group.finish();
}

fn random_table(c: &mut Criterion) {
    let t = RandomTable { seed: 3 };
    let g = FlatGenome::random(100, &mut seeded_rng(2));
    c.bench_function("random_table_100", |b| b.iter(|| t.evaluate(black_box(&g))));
}

fn parse_stream(c: &mut Criterion) {
    let width = IdWidth::new(6).unwrap();
    let mut rng = seeded_rng(3);
    let segments: Vec<Segment> = (0..64)
        .map(|id| Segment::new(id, FlatGenome::random(16, &mut rng).bits().to_vec()))
        .collect();
    let stream = serialize(&segments, width).unwrap();
    c.bench_function("parse_64_segments", |b| {
        b.iter(|| parse(black_box(&stream), width))
    });
}

fn engine_step(c: &mut Criterion) {
    let landscape = FlatLandscape::OneMax { length: 100 };
    let template = FlatTemplate { length: 100 };
    let params = GaParams {
        population_size: 100,
        generations: 50,
        survivor_fraction: 0.1,
        elitist: true,
        init: InitMode::Random,
    };
    let ops = OperatorConfig {
        p_m: 0.001,
        crossover: CrossoverKind::UniformFlat,
        ..OperatorConfig::default()
    };
    let mut rng = seeded_rng(4);
    let members: Vec<FlatGenome> = init_population(&params, &template, &mut rng);
    let fitness = members.iter().map(|g| landscape.evaluate(g)).collect();
    let pop = Population {
        members,
        fitness,
        generation: 0,
    };
    c.bench_function("onemax_step_n100_l100", |b| {
        b.iter(|| step(black_box(&pop), &params, &ops, &landscape, &mut rng).unwrap())
    });
}

criterion_group!(
    benches,
    nk_evaluate,
    random_table,
    parse_stream,
    engine_step
);
criterion_main!(benches);
