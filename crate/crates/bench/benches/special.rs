use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use ferrers_core::ferrers::{ferrers_p_value, ferrers_q_value, legendre_q};
use ferrers_core::poly::{gegenbauer_c, jacobi_p};
use ferrers_core::special::{bessel_j, gauss_2f1, log_gamma, DEFAULT_TOL};
use ferrers_core::LegendreQArgs;

fn gamma_and_series(c: &mut Criterion) {
    c.bench_function("log_gamma", |b| b.iter(|| log_gamma(black_box(7.3))));
    c.bench_function("gauss_2f1 z=0.4", |b| {
        b.iter(|| gauss_2f1(black_box(0.3), 1.7, 2.2, black_box(0.4), DEFAULT_TOL))
    });
    c.bench_function("bessel_j order 1.3", |b| {
        b.iter(|| bessel_j(black_box(1.3), black_box(2.5), DEFAULT_TOL))
    });
}

fn ferrers(c: &mut Criterion) {
    let mut g = c.benchmark_group("ferrers_p");
    for &(nu, mu) in &[(5.3, -0.3), (8.0, -2.0), (3.7, 0.45), (2.0, 2.0)] {
        g.bench_with_input(
            BenchmarkId::from_parameter(format!("{nu}_{mu}")),
            &(nu, mu),
            |b, &(nu, mu)| b.iter(|| ferrers_p_value(nu, mu, black_box(0.37))),
        );
    }
    g.finish();
    c.bench_function("ferrers_q 2.5 0.5", |b| {
        b.iter(|| ferrers_q_value(2.5, 0.5, black_box(-0.2)))
    });
    c.bench_function("legendre_q olver", |b| {
        b.iter(|| legendre_q(LegendreQArgs::olver(1.3, 0.4, black_box(1.7)), DEFAULT_TOL))
    });
}

fn polynomials(c: &mut Criterion) {
    let mut g = c.benchmark_group("gegenbauer_c");
    for n in [4usize, 32, 256] {
        g.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| gegenbauer_c(n, 0.75, black_box(0.3)))
        });
    }
    g.finish();
    c.bench_function("jacobi_p n=12", |b| {
        b.iter(|| jacobi_p(12, 0.5, -0.25, black_box(-0.4)))
    });
}

criterion_group!(benches, gamma_and_series, ferrers, polynomials);
criterion_main!(benches);
