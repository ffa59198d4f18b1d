use chebknot_bench::INSTANCES;
use chebknot_core::{compute_r_exact, compute_r_numeric};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn exact_vs_numeric(c: &mut Criterion) {
    let mut g = c.benchmark_group("discriminant");
    g.sample_size(10);
    for &(a, b, cc) in INSTANCES {
        let id = format!("{a},{b},{cc}");
        g.bench_with_input(
            BenchmarkId::new("exact", &id),
            &(a, b, cc),
            |bch, &(a, b, cc)| bch.iter(|| compute_r_exact(a, b, cc).unwrap()),
        );
        g.bench_with_input(
            BenchmarkId::new("numeric", &id),
            &(a, b, cc),
            |bch, &(a, b, cc)| bch.iter(|| compute_r_numeric(a, b, cc).unwrap()),
        );
    }
    g.finish();
}

criterion_group!(benches, exact_vs_numeric);
criterion_main!(benches);
