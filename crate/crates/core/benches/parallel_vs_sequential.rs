use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use binomial_euler::identities::{verify_all, QMode, VerifyOptions};
use binomial_euler::legendre::check_agreement;
use binomial_euler::Execution;

fn modes() -> [(&'static str, Execution); 2] {
    [
        ("sequential", Execution::Sequential),
        ("parallel", Execution::Parallel),
    ]
}

fn identity_suite(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify_all");
    group.sample_size(10);
    for n_max in [6, 10] {
        for (name, exec) in modes() {
            let opts = VerifyOptions {
                exec,
                ..Default::default()
            };
            group.bench_with_input(BenchmarkId::new(name, n_max), &n_max, |b, &n_max| {
                b.iter(|| verify_all(n_max, QMode::Symbolic, &opts).unwrap())
            });
        }
    }
    group.finish();
}

fn legendre_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("legendre_agreement");
    group.sample_size(10);
    for (name, exec) in modes() {
        group.bench_function(BenchmarkId::new(name, 15), |b| {
            b.iter(|| check_agreement(15, exec))
        });
    }
    group.finish();
}

criterion_group!(benches, identity_suite, legendre_sweep);
criterion_main!(benches);
