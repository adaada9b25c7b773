use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use schubert_trace::oracle::{OracleConfig, Sweep};
use schubert_trace::Execution;

fn sweeps(c: &mut Criterion) {
    let mut group = c.benchmark_group("sweeps");
    group.sample_size(10);
    let cases = [
        (Sweep::TraceSetIdentity, 3, 8),
        (Sweep::Straightening, 3, 6),
        (Sweep::PosetIsomorphism, 3, 3),
        (Sweep::Thresholds, 4, 4),
    ];
    for (sweep, m, n) in cases {
        for (label, execution) in [
            ("sequential", Execution::Sequential),
            ("parallel", Execution::Parallel),
        ] {
            let cfg = OracleConfig {
                execution,
                trials: 5,
                ..OracleConfig::default()
            };
            group.bench_with_input(
                BenchmarkId::new(format!("{sweep}/{label}"), format!("{m}x{n}")),
                &cfg,
                |b, cfg| b.iter(|| sweep.run(m, n, cfg).unwrap()),
            );
        }
    }
    group.finish();
}

criterion_group!(benches, sweeps);
criterion_main!(benches);
