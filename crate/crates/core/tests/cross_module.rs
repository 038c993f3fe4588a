use num_rational::BigRational;
use num_traits::One;

use frobenius_euler::exactnum::{rational_to_f64, ExactRational};
use frobenius_euler::fourier::{partial_sum, partial_sum_with};
use frobenius_euler::frobenius::{euler_sequence, fe_eval, fe_number_table, fe_polynomial};
use frobenius_euler::lerch::{bilateral_sum_with, bilateral_tail_bound};
use frobenius_euler::parallel::Backend;
use frobenius_euler::stirling::stirling2_table;

fn q(n: i64, d: i64) -> ExactRational {
    BigRational::new(n.into(), d.into())
}

#[test]
fn bilateral_sum_reproduces_euler_polynomials() {
    let n = 4096;
    let seq = euler_sequence(6);
    for m in 1..=5usize {
        for x in [q(1, 4), q(1, 3), q(1, 2), q(2, 3)] {
            let exact = rational_to_f64(&seq.polynomials[m].eval(&x));
            let scale = 2.0 * (1..=m).product::<usize>() as f64;
            let s = bilateral_sum_with(Backend::Sequential, m as u32 + 1, rational_to_f64(&x), n).unwrap() * scale;
            assert!((s - exact).norm() <= scale * bilateral_tail_bound(m as u32 + 1, n) + 1e-12, "m={m}");
        }
    }
}

#[test]
fn fourier_and_lerch_paths_agree_at_u_minus_one() {
    // Both sum the same antiperiodic series; only the term assembly differs.
    let t = fe_number_table(8);
    let minus_one = -ExactRational::one();
    for m in 2..=4usize {
        let x = 0.3;
        let fourier = partial_sum(m, &minus_one, x, 512, &t).unwrap();
        let scale = 2.0 * (1..=m).product::<usize>() as f64;
        let lerch = bilateral_sum_with(Backend::Sequential, m as u32 + 1, x, 512).unwrap() * scale;
        assert!((fourier - lerch).norm() < 1e-12, "m={m}: {fourier} vs {lerch}");
    }
}

#[test]
fn backends_are_bit_identical() {
    let t = fe_number_table(6);
    for u in [q(2, 1), q(1, 3), q(-3, 1)] {
        let a = partial_sum_with(Backend::Sequential, 5, &u, 0.25, 2048, &t).unwrap();
        let b = partial_sum_with(Backend::Parallel, 5, &u, 0.25, 2048, &t).unwrap();
        assert_eq!(a, b);
    }
    let a = bilateral_sum_with(Backend::Sequential, 3, 0.4, 1000).unwrap();
    let b = bilateral_sum_with(Backend::Parallel, 3, 0.4, 1000).unwrap();
    assert_eq!(a, b);
}

#[test]
fn frobenius_numbers_from_stirling_numbers() {
    // H_m(u) = sum_k k! S2(m,k) (u-1)^{-k}, checked at sample points.
    let t = fe_number_table(10);
    let s2 = stirling2_table(10);
    for u in [q(-3, 1), q(1, 3), q(2, 1), q(5, 7)] {
        let base = ExactRational::one() / (&u - ExactRational::one());
        for m in 0..=10usize {
            let mut sum = ExactRational::from_integer(0.into());
            let mut fact = ExactRational::one();
            for k in 0..=m {
                if k > 0 {
                    fact *= ExactRational::from_integer(k.into());
                }
                let s = ExactRational::from_integer(s2.get(m, k).into());
                sum += &fact * s * num_traits::pow(base.clone(), k);
            }
            assert_eq!(sum, t.get(m).unwrap().eval(&u).unwrap(), "m={m}");
        }
    }
}

#[test]
fn polynomial_values_at_zero_are_the_numbers() {
    let t = fe_number_table(10);
    for n in 0..=10 {
        let p = fe_polynomial(n, &t).unwrap();
        for u in [q(2, 1), q(-1, 2)] {
            let zero = ExactRational::from_integer(0.into());
            assert_eq!(fe_eval(&p, &u, &zero).unwrap(), t.get(n).unwrap().eval(&u).unwrap());
        }
    }
}
