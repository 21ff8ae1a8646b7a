use bethe_bench::qubit_params;
use bethe_core::algebraic_bethe::{b_block, build_state, commutator_norm};
use bethe_core::heisenberg::{eigen_decompose, hamiltonian_configuration, hamiltonian_wavelet};
use bethe_core::inverse_bethe::{qubit_seed, solve_bethe_newton, solve_qubit_phases};
use bethe_core::lattice::RingSector;
use bethe_core::polynomials::roots;
use bethe_core::Complex64;
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

fn polynomial_roots(c: &mut Criterion) {
    let f = bethe_core::inverse_bethe::heptagon_qubit_polynomial();
    c.bench_function("roots/sextic", |b| {
        b.iter(|| roots(black_box(&f), 1e-12).unwrap())
    });
    c.bench_function("qubit/radicals", |b| b.iter(solve_qubit_phases));
    c.bench_function("qubit/newton", |b| {
        b.iter(|| solve_bethe_newton(7, 3, 0, black_box(&qubit_seed()), 1e-12).unwrap())
    });
}

fn spectra(c: &mut Criterion) {
    let mut group = c.benchmark_group("eigen");
    group.sample_size(10);
    for n in [7usize, 10] {
        let h = hamiltonian_configuration(n, n / 2).unwrap().entries;
        group.bench_with_input(BenchmarkId::new("configuration", n), &h, |b, h| {
            b.iter(|| eigen_decompose(h, 1e-9).unwrap())
        });
    }
    for n in [7usize, 10, 12, 14] {
        let w = hamiltonian_wavelet(RingSector::new(n, n / 2, 0).unwrap())
            .unwrap()
            .entries;
        group.bench_with_input(BenchmarkId::new("wavelet", n), &w, |b, w| {
            b.iter(|| eigen_decompose(w, 1e-9).unwrap())
        });
    }
    group.finish();
}

fn monodromy(c: &mut Criterion) {
    let lambda = Complex64::new(0.3, -0.2);
    let mut group = c.benchmark_group("b_block");
    for n in [7usize, 10, 14] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| b_block(black_box(lambda), n / 2, n).unwrap())
        });
    }
    group.finish();
    let params = qubit_params();
    c.bench_function("build_state/qubit", |b| {
        b.iter(|| build_state(black_box(&params), 7).unwrap())
    });
    c.bench_function("commutator/7", |b| {
        b.iter(|| commutator_norm(lambda, Complex64::new(-0.4, 0.1), 7).unwrap())
    });
}

criterion_group!(benches, polynomial_roots, spectra, monodromy);
criterion_main!(benches);
