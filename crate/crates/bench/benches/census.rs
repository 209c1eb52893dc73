use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use singer_bench::{monic_polys, primitive_companions, tower};
use singer_core::census;
use singer_core::gf::poly;
use singer_core::linalg;

fn char_poly(c: &mut Criterion) {
    let mut group = c.benchmark_group("char_poly");
    for (q, d) in [(2u64, 4usize), (2, 6), (3, 4)] {
        let mats = primitive_companions(q, d);
        group.bench_with_input(BenchmarkId::from_parameter(format!("q{q}_d{d}")), &mats, |b, mats| {
            b.iter(|| mats.iter().map(|t| linalg::char_poly(t).unwrap()).collect::<Vec<_>>())
        });
    }
    group.finish();
}

fn is_irreducible(c: &mut Criterion) {
    let mut group = c.benchmark_group("is_irreducible");
    for (q, d) in [(2u64, 8usize), (3, 5), (4, 4)] {
        let (k, polys) = monic_polys(q, d);
        group.bench_with_input(BenchmarkId::from_parameter(format!("q{q}_d{d}")), &polys, |b, polys| {
            b.iter(|| polys.iter().filter(|f| poly::is_irreducible(&k, f)).count())
        });
    }
    group.finish();
}

fn fibers(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_fibers");
    group.sample_size(10);
    for (q, m, n) in [(2u64, 2u32, 2u32), (2, 2, 3), (3, 2, 2)] {
        group.bench_function(format!("q{q}_m{m}_n{n}"), |b| {
            b.iter(|| census::enumerate_fibers(q, m, n, census::DEFAULT_EXHAUSTIVE_CEILING).unwrap())
        });
    }
    group.finish();
}

fn splitting(c: &mut Criterion) {
    let t = tower(2, 2, 2);
    let ctx = census::SplitContext::new(&t, census::default_alpha(&t).unwrap()).unwrap();
    c.bench_function("splitting_subspaces_q2_m2_n2", |b| {
        b.iter(|| census::enumerate_splitting_subspaces(&ctx, census::DEFAULT_EXHAUSTIVE_CEILING).unwrap())
    });
}

criterion_group!(benches, char_poly, is_irreducible, fibers, splitting);
criterion_main!(benches);
