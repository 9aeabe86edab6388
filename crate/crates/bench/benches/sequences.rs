use bernstir::identities::{check_l1_inversion, check_t6};
use bernstir::sequences::{bernoulli_first_by_recurrence, bernoulli_second_by_series};
use bernstir::{BernoulliCache, BernoulliKind, Polynomial, StirlingKind, StirlingTriangle};
use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

fn triangles(c: &mut Criterion) {
    let mut group = c.benchmark_group("stirling_triangle");
    for n in [50, 200] {
        for kind in [StirlingKind::FirstSigned, StirlingKind::Second] {
            group.bench_with_input(BenchmarkId::new(format!("{kind:?}"), n), &n, |b, &n| {
                b.iter(|| StirlingTriangle::new(kind).get(black_box(n), n / 2))
            });
        }
    }
    group.finish();
}

fn bernoulli_routes(c: &mut Criterion) {
    let mut group = c.benchmark_group("bernoulli_100");
    group.sample_size(10);
    group.bench_function("first/stirling_sum", |b| {
        b.iter(|| BernoulliCache::new(BernoulliKind::First).get(black_box(100)))
    });
    group.bench_function("first/recurrence", |b| b.iter(|| bernoulli_first_by_recurrence(black_box(100))));
    group.bench_function("second/integral", |b| {
        b.iter(|| BernoulliCache::new(BernoulliKind::Second).get(black_box(100)))
    });
    group.bench_function("second/series", |b| b.iter(|| bernoulli_second_by_series(black_box(100))));
    group.finish();
}

fn polynomial_ops(c: &mut Criterion) {
    let p = Polynomial::falling_product(0, 40);
    c.bench_function("poly/to_falling_deg40", |b| b.iter(|| black_box(&p).to_falling()));
    c.bench_function("poly/delta_inv_monomial_deg40", |b| b.iter(|| black_box(&p).delta_inv()));
    c.bench_function("poly/delta_monomial_deg40", |b| b.iter(|| black_box(&p).delta()));
}

fn checkers(c: &mut Criterion) {
    let mut group = c.benchmark_group("checkers");
    group.sample_size(10);
    group.bench_function("l1_inversion_100x40", |b| b.iter(|| check_l1_inversion(100, 40, 0)));
    group.bench_function("t6_5x40", |b| b.iter(|| check_t6(5, 40)));
    group.finish();
}

criterion_group!(benches, triangles, bernoulli_routes, polynomial_ops, checkers);
criterion_main!(benches);
