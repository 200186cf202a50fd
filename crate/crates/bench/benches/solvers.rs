use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rabi_bench::{parameter_points, test_matrix};
use rabi_core::sweep::preset;
use rabi_core::{analytic_spectrum, build_hamiltonian, exact_spectrum, lambda_root, symmetric_eigen, run_sweep};
use std::hint::black_box;

fn lambda(c: &mut Criterion) {
    let mut group = c.benchmark_group("lambda_root");
    for (name, p) in parameter_points() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &p, |b, p| b.iter(|| lambda_root(black_box(p))));
    }
    group.finish();
}

fn analytic(c: &mut Criterion) {
    let mut group = c.benchmark_group("analytic_spectrum_64");
    for (name, p) in parameter_points() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &p, |b, p| {
            b.iter(|| analytic_spectrum(black_box(p), 64))
        });
    }
    group.finish();
}

fn eigensolver(c: &mut Criterion) {
    let mut group = c.benchmark_group("symmetric_eigen");
    for dim in [50, 122, 242] {
        let h = test_matrix(dim);
        group.bench_with_input(BenchmarkId::new("values", dim), &h, |b, h| b.iter(|| symmetric_eigen(h, false)));
        group.bench_with_input(BenchmarkId::new("vectors", dim), &h, |b, h| b.iter(|| symmetric_eigen(h, true)));
    }
    let (_, p) = parameter_points()[1];
    let h = build_hamiltonian(&p, 60).expect("valid cutoff");
    group.bench_function("rabi_n60", |b| b.iter(|| symmetric_eigen(&h, false)));
    group.finish();
}

fn exact(c: &mut Criterion) {
    let mut group = c.benchmark_group("exact_spectrum_10");
    group.sample_size(20);
    for (name, p) in parameter_points() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &p, |b, p| {
            b.iter(|| exact_spectrum(black_box(p), 10, 1e-10 * p.omega))
        });
    }
    group.finish();
}

fn sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("preset");
    group.sample_size(10);
    for name in ["fig3", "fig4"] {
        let spec = preset(name).expect("preset exists");
        group.bench_function(name, |b| b.iter(|| run_sweep(&spec)));
    }
    group.finish();
}

criterion_group!(benches, lambda, analytic, eigensolver, exact, sweep);
criterion_main!(benches);
