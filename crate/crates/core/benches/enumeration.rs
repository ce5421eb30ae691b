use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use icc_core::cyclotomy::trace_count_matrix;
use icc_core::{brute_weight_distribution, build_code, Exec, Strategy};

fn execs() -> Vec<(&'static str, Exec)> {
    let mut v = vec![("sequential", Exec::sequential())];
    if cfg!(feature = "parallel") {
        v.push(("parallel", Exec::auto()));
    }
    v
}

fn weights(c: &mut Criterion) {
    let mut group = c.benchmark_group("weights");
    group.sample_size(10);
    for (p, s, m, n) in [(7u64, 1u32, 2u32, 6u64), (29, 1, 2, 7), (3, 1, 8, 8), (7, 1, 5, 6)] {
        let spec = build_code(p, s, m, n).unwrap();
        let id = format!("{p}^{m}/N{n}");
        for strategy in [Strategy::Direct, Strategy::ClassOrbit] {
            // the direct path on 7^5 is the stress case; keep it to the accelerated one
            if strategy == Strategy::Direct && spec.params.r > 10_000 {
                continue;
            }
            for (label, exec) in execs() {
                group.bench_with_input(BenchmarkId::new(format!("{strategy:?}/{label}"), &id), &spec, |b, spec| {
                    b.iter(|| brute_weight_distribution(black_box(spec), strategy, exec))
                });
            }
        }
    }
    group.finish();
}

fn trace_matrix(c: &mut Criterion) {
    let mut group = c.benchmark_group("trace_matrix");
    group.sample_size(10);
    for (p, d, n) in [(17u64, 4u32, 8u64), (3, 12, 8)] {
        let field = icc_core::FieldTable::with_cap(p, d, 1 << 22).unwrap();
        for (label, exec) in execs() {
            group.bench_function(BenchmarkId::new(label, format!("{p}^{d}/N{n}")), |b| {
                b.iter(|| trace_count_matrix(black_box(&field), n, exec).unwrap())
            });
        }
    }
    group.finish();
}

criterion_group!(benches, weights, trace_matrix);
criterion_main!(benches);
