use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use sphere_spectra::clifford::{casimir_matrix, gamma_matrices};
use sphere_spectra::exact::{ComplexRational, ExactMatrix, Rational};
use sphere_spectra::spectra::{higher_spin_spectrum_with, verify_grid, Pairing, VerifyOptions};
use sphere_spectra::Strategy;

const STRATEGIES: [(&str, Strategy); 2] = [("sequential", Strategy::Sequential), ("parallel", Strategy::Parallel)];

fn dense(n: usize) -> ExactMatrix {
    ExactMatrix::from_fn(n, n, |i, j| {
        let a = (i * 7 + j * 3) % 11;
        let b = (i + 2 * j) % 5 + 1;
        ComplexRational::new(Rational::ratio(a as i64 - 5, b as i64), Rational::ratio((i + j) as i64 % 3, 2))
    })
}

fn matrix_product(c: &mut Criterion) {
    let mut g = c.benchmark_group("matrix_product");
    g.sample_size(10);
    for size in [40, 80] {
        let m = dense(size);
        for (name, s) in STRATEGIES {
            g.bench_with_input(BenchmarkId::new(name, size), &m, |b, m| b.iter(|| m.mul_with(black_box(m), s)));
        }
    }
    g.finish();
}

fn casimir_square(c: &mut Criterion) {
    let rep = gamma_matrices(6).unwrap();
    let cas = casimir_matrix(&rep, 3).unwrap();
    let mut g = c.benchmark_group("casimir_square_n6_k3");
    g.sample_size(10);
    for (name, s) in STRATEGIES {
        g.bench_function(name, |b| b.iter(|| cas.mul_with(black_box(&cas), s)));
    }
    g.finish();
}

fn spectra(c: &mut Criterion) {
    let mut g = c.benchmark_group("spectra");
    g.sample_size(10);
    for (name, s) in STRATEGIES {
        g.bench_function(BenchmarkId::new("higher_spin_n9_j4_l200", name), |b| {
            b.iter(|| higher_spin_spectrum_with(9, 4, 200, Pairing::Validated, s).unwrap())
        });
        g.bench_function(BenchmarkId::new("verify_grid_n2_9_l10", name), |b| {
            b.iter(|| verify_grid(2..=9, 10, VerifyOptions { strategy: s, ..Default::default() }).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, matrix_product, casimir_square, spectra);
criterion_main!(benches);
