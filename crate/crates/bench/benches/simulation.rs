use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use rand::Rng;

use spooky_core::{
    bell_state, binomial_half_exact, boost, measure_party, run_campaign, sample_run, stream_rng,
    DetectorSite, ExperimentConfig, MeasurementBasis, ObserverFrame, Party, SpacetimeEvent,
};

fn bench_binomial_exact(c: &mut Criterion) {
    let mut group = c.benchmark_group("binomial_half_exact");
    for n in [100u64, 10_000, 1_000_000] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            let mut rng = stream_rng(1, 0);
            b.iter(|| {
                let u: f64 = rng.random();
                black_box(binomial_half_exact(black_box(n), u))
            });
        });
    }
    group.finish();
}

fn bench_measurement(c: &mut Criterion) {
    let circ = MeasurementBasis::circular();
    let state = bell_state();
    let mut rng = stream_rng(2, 0);
    c.bench_function("measure_party_circular", |b| {
        b.iter(|| {
            let u: f64 = rng.random();
            black_box(measure_party(black_box(&state), Party::One, &circ, u))
        });
    });
}

fn bench_boost(c: &mut Criterion) {
    let event = SpacetimeEvent::new(3e4, 1e-12, DetectorSite::Charlie).unwrap();
    let frame = ObserverFrame::new(10.0).unwrap();
    c.bench_function("boost", |b| {
        b.iter(|| black_box(boost(black_box(&event), black_box(&frame))));
    });
}

fn bench_sample_run(c: &mut Criterion) {
    let cfg = ExperimentConfig::default();
    let mut i = 0u64;
    c.bench_function("sample_run_1e8_pairs", |b| {
        b.iter(|| {
            i = i.wrapping_add(1);
            black_box(sample_run(black_box(&cfg), i).unwrap())
        });
    });
}

fn bench_campaign(c: &mut Criterion) {
    let cfg = ExperimentConfig {
        repetitions: 256,
        ..ExperimentConfig::default()
    };
    c.bench_function("run_campaign_256_reps", |b| {
        b.iter(|| black_box(run_campaign(black_box(&cfg)).unwrap()));
    });
}

criterion_group!(
    benches,
    bench_binomial_exact,
    bench_measurement,
    bench_boost,
    bench_sample_run,
    bench_campaign
);
criterion_main!(benches);
