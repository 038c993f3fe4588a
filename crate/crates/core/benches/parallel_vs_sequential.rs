use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use num_rational::BigRational;

use frobenius_euler::exactnum::ExactRational;
use frobenius_euler::fourier::{fourier_coeff_exact, oscillatory_integral, partial_sum_numeric, verify_fourier, FourierCheck, FourierParams};
use frobenius_euler::frobenius::fe_number_table;
use frobenius_euler::fourier::numeric_polynomial;
use frobenius_euler::lerch::bilateral_sum_with;
use frobenius_euler::parallel::Backend;

const BACKENDS: [(&str, Backend); 2] = [("sequential", Backend::Sequential), ("parallel", Backend::Parallel)];

fn u_two() -> ExactRational {
    BigRational::from_integer(2.into())
}

fn partial_sums(c: &mut Criterion) {
    let t = fe_number_table(6);
    let coeffs = fourier_coeff_exact(5, &t).unwrap().numeric(&u_two()).unwrap();
    let mut g = c.benchmark_group("partial_sum_N8192");
    for (name, backend) in BACKENDS {
        g.bench_function(name, |b| b.iter(|| partial_sum_numeric(&coeffs, black_box(0.25), 8192, backend)));
    }
    g.finish();
}

fn quadrature(c: &mut Criterion) {
    let t = fe_number_table(6);
    let poly = numeric_polynomial(6, &u_two(), &t).unwrap();
    let mut g = c.benchmark_group("quadrature_n5");
    for (name, backend) in BACKENDS {
        g.bench_function(name, |b| b.iter(|| oscillatory_integral(&poly, black_box(5), 1e-12, backend).unwrap()));
    }
    g.finish();
}

fn coefficient_grid(c: &mut Criterion) {
    let t = fe_number_table(8);
    let mut g = c.benchmark_group("coeff_consistency_grid");
    g.sample_size(10);
    for (name, backend) in BACKENDS {
        let params = FourierParams { backend, ..FourierParams::default() };
        g.bench_function(name, |b| b.iter(|| verify_fourier(FourierCheck::CoeffConsistency, &params, &t).unwrap()));
    }
    g.finish();
}

fn bilateral(c: &mut Criterion) {
    let mut g = c.benchmark_group("bilateral_sum");
    for n in [1024usize, 16384] {
        for (name, backend) in BACKENDS {
            g.bench_with_input(BenchmarkId::new(name, n), &n, |b, &n| {
                b.iter(|| bilateral_sum_with(backend, 3, black_box(1.0 / 3.0), n).unwrap())
            });
        }
    }
    g.finish();
}

criterion_group!(benches, partial_sums, quadrature, coefficient_grid, bilateral);
criterion_main!(benches);
