use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use tlcell_core::arith::{Generic, SpecializationParams};
use tlcell_core::cellular::{generic_rank, gram_matrix, gram_matrix_at};
use tlcell_core::linalg::rank;
use tlcell_core::oracle::{commutant_dim, divided_power_bound, tensor_action};
use tlcell_core::projectors::{jones_wenzl_in, tensor_projector};

fn projectors(c: &mut Criterion) {
    // p_d itself is cached, so this times moving it to a root of unity
    let mut g = c.benchmark_group("jones_wenzl_specialize");
    for d in [4usize, 6, 8] {
        let f = SpecializationParams::from_ell(d as u32 + 1).unwrap().field();
        g.bench_with_input(BenchmarkId::from_parameter(d), &d, |b, &d| b.iter(|| jones_wenzl_in(&f, black_box(d)).unwrap()));
    }
    g.bench_function("tensor_projector/3x3", |b| b.iter(|| tensor_projector(black_box(3), 3)));
    g.finish();
}

fn gram(c: &mut Criterion) {
    let mut g = c.benchmark_group("gram");
    g.sample_size(10);
    for (d, r, t) in [(2usize, 4usize, 4usize), (3, 3, 3), (1, 8, 2)] {
        let id = format!("{d},{r},{t}");
        g.bench_function(BenchmarkId::new("generic", &id), |b| b.iter(|| gram_matrix(d, r, t).unwrap()));
        let params = SpecializationParams::from_ell(d as u32 + 1).unwrap();
        g.bench_function(BenchmarkId::new("specialized", &id), |b| b.iter(|| gram_matrix_at(d, r, t, &params).unwrap()));
    }
    g.finish();
}

fn ranks(c: &mut Criterion) {
    let mut g = c.benchmark_group("rank");
    g.sample_size(10);
    for (d, r, t) in [(2usize, 4usize, 4usize), (1, 8, 2)] {
        let id = format!("{d},{r},{t}");
        let m = gram_matrix(d, r, t).unwrap();
        g.bench_function(BenchmarkId::new("generic", &id), |b| b.iter(|| generic_rank(black_box(&m))));
        let params = SpecializationParams::from_ell(d as u32 + 1).unwrap();
        let at = gram_matrix_at(d, r, t, &params).unwrap();
        let f = params.field();
        g.bench_function(BenchmarkId::new("specialized", &id), |b| b.iter(|| rank(&f, black_box(&at))));
    }
    g.finish();
}

fn commutant(c: &mut Criterion) {
    let mut g = c.benchmark_group("commutant");
    g.sample_size(10);
    for (d, r) in [(1usize, 5usize), (2, 3), (3, 2)] {
        let id = format!("{d},{r}");
        let a = tensor_action(&Generic, d, r, 1).unwrap();
        g.bench_function(BenchmarkId::new("generic", &id), |b| b.iter(|| commutant_dim(black_box(&a))));
        let params = SpecializationParams::from_ell(d as u32 + 1).unwrap();
        let s = tensor_action(&params.field(), d, r, divided_power_bound(d, Some(&params))).unwrap();
        g.bench_function(BenchmarkId::new("specialized", &id), |b| b.iter(|| commutant_dim(black_box(&s))));
    }
    g.finish();
}

criterion_group!(benches, projectors, gram, ranks, commutant);
criterion_main!(benches);
