use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use entcont::experiments::{run_figure1, run_property_suite, ExperimentConfig, Suite};
use entcont::linalg::hermitian_eigensystem;
use entcont::states::random_hermitian;
use entcont::Execution;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;

fn eigensolver(c: &mut Criterion) {
    let mut group = c.benchmark_group("eigensolver");
    let mut rng = ChaCha20Rng::seed_from_u64(7);
    for d in [4usize, 8, 15, 30] {
        let h = random_hermitian(d, &mut rng);
        group.bench_with_input(BenchmarkId::new("vectors", d), &h, |b, h| {
            b.iter(|| hermitian_eigensystem(black_box(h)))
        });
        group.bench_with_input(BenchmarkId::new("values", d), &h, |b, h| {
            b.iter(|| black_box(h).eigenvalues())
        });
    }
    group.finish();
}

fn modes() -> [(&'static str, Execution); 2] {
    [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)]
}

fn figure1(c: &mut Criterion) {
    let mut group = c.benchmark_group("figure1_d15_64_trials");
    group.sample_size(10);
    let cfg = ExperimentConfig {
        dim: Some(15),
        trials: 64,
        ..Default::default()
    };
    for (name, exec) in modes() {
        group.bench_function(name, |b| b.iter(|| run_figure1(&cfg, exec).unwrap()));
    }
    group.finish();
}

fn theorem1_suite(c: &mut Criterion) {
    let mut group = c.benchmark_group("theorem1_suite_d8_256_trials");
    group.sample_size(10);
    let cfg = ExperimentConfig {
        dim: Some(8),
        trials: 256,
        ..Default::default()
    };
    for (name, exec) in modes() {
        group.bench_function(name, |b| {
            b.iter(|| run_property_suite(&cfg, Suite::Theorem1, exec).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, eigensolver, figure1, theorem1_suite);
criterion_main!(benches);
