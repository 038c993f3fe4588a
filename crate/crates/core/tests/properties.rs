use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

use frobenius_euler::exactnum::{rat_normalize, ExactRational, PowerSeries, UPolynomial, URational};
use frobenius_euler::fourier::{fourier_coeff_exact, l2_norm_squared};
use frobenius_euler::frobenius::{fe_eval, fe_number_table, fe_polynomial};
use frobenius_euler::lerch::{lerch_phi, lerch_phi_terms};
use frobenius_euler::stirling::{stirling2_bruteforce, stirling2_table};

fn small_rational() -> impl Strategy<Value = ExactRational> {
    (-10i64..=10, 1i64..=10).prop_map(|(n, d)| BigRational::new(n.into(), d.into()))
}

fn small_poly(max_deg: usize) -> impl Strategy<Value = UPolynomial> {
    prop::collection::vec(-10i64..=10, 0..=max_deg + 1).prop_map(|c| UPolynomial::from_ints(&c))
}

fn nonzero_poly(max_deg: usize) -> impl Strategy<Value = UPolynomial> {
    small_poly(max_deg).prop_filter("nonzero", |p| !p.is_zero())
}

fn small_urational() -> impl Strategy<Value = URational> {
    (small_poly(3), nonzero_poly(3)).prop_map(|(n, d)| rat_normalize(n, d).unwrap())
}

fn small_series(order: usize) -> impl Strategy<Value = PowerSeries<ExactRational>> {
    prop::collection::vec(small_rational(), 0..=order + 1).prop_map(move |c| PowerSeries::new(c, order))
}

/// u samples away from the pole at 1.
fn sample_u() -> impl Strategy<Value = ExactRational> {
    small_rational().prop_filter("u != 1", |u| !u.is_one())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn normalization_is_idempotent(n in small_poly(4), d in nonzero_poly(4)) {
        let once = rat_normalize(n, d).unwrap();
        let twice = rat_normalize(once.numer().clone(), once.denom().clone()).unwrap();
        prop_assert_eq!(&once, &twice);
        prop_assert!(once.denom().is_monic());
    }

    #[test]
    fn urational_ring_laws(a in small_urational(), b in small_urational(), c in small_urational()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, URational::zero());
        prop_assert_eq!(&a * &URational::one(), a.clone());
    }

    #[test]
    fn urational_eval_is_a_homomorphism(a in small_urational(), b in small_urational(), u in small_rational()) {
        if let (Ok(av), Ok(bv)) = (a.eval(&u), b.eval(&u)) {
            prop_assert_eq!((&a * &b).eval(&u).unwrap(), &av * &bv);
            prop_assert_eq!((&a + &b).eval(&u).unwrap(), &av + &bv);
        }
    }

    #[test]
    fn series_ring_laws(a in small_series(6), b in small_series(6), c in small_series(6)) {
        prop_assert_eq!(a.product(&b), b.product(&a));
        prop_assert_eq!(a.product(&b).product(&c), a.product(&b.product(&c)));
        prop_assert_eq!(a.product(&b.add(&c)), a.product(&b).add(&a.product(&c)));
        prop_assert_eq!(a.product(&PowerSeries::one(6)), a.clone());
    }

    #[test]
    fn reciprocal_is_inverse(order in 1usize..=20, lead in small_rational(), rest in prop::collection::vec(small_rational(), 0..20)) {
        prop_assume!(!lead.is_zero());
        let mut coeffs = vec![lead];
        coeffs.extend(rest);
        let a = PowerSeries::new(coeffs, order);
        let inv = a.reciprocal().unwrap();
        prop_assert_eq!(a.product(&inv), PowerSeries::one(order));
    }

    #[test]
    fn substitution_order_does_not_matter(n in 0usize..=8, u in sample_u(), x in small_rational()) {
        let p = fe_polynomial(n, &fe_number_table(n)).unwrap();
        let direct = fe_eval(&p, &u, &x).unwrap();
        let u_first = p.specialize_u(&u).unwrap().eval(&x);
        let x_first = p.eval_x(&x).eval(&u).unwrap();
        prop_assert_eq!(&direct, &u_first);
        prop_assert_eq!(&direct, &x_first);
    }

    #[test]
    fn frobenius_polynomials_are_monic_appell(n in 1usize..=12) {
        let t = fe_number_table(n);
        let p = fe_polynomial(n, &t).unwrap();
        let q = fe_polynomial(n - 1, &t).unwrap();
        prop_assert!(p.is_monic());
        prop_assert_eq!(p.derivative(), q.scale(&URational::from_int(n as i64)));
    }

    #[test]
    fn bessel_inequality(m in 0usize..=5, u in sample_u(), window in 1i64..=8) {
        let t = fe_number_table(m);
        let coeffs = fourier_coeff_exact(m, &t).unwrap().numeric(&u).unwrap();
        let energy: f64 = (-window..window).map(|n| coeffs.eval(n).norm_sqr()).sum();
        let norm = frobenius_euler::exactnum::rational_to_f64(&l2_norm_squared(m, &u, &t).unwrap());
        prop_assert!(energy <= norm * (1.0 + 1e-12) + 1e-300, "{} > {}", energy, norm);
    }

    #[test]
    fn stirling_recurrence_matches_enumeration(m in 0usize..=9, n in 0usize..=9) {
        let s2 = stirling2_table(9);
        if n > m {
            prop_assert!(s2.get(m, n).is_zero());
        } else {
            prop_assert_eq!(s2.get(m, n), stirling2_bruteforce(m, n).unwrap().into());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn lerch_tail_bound_is_certified(r in 0.0f64..0.95, theta in 0.0f64..std::f64::consts::TAU, s in 0.5f64..6.0, a in 0.1f64..4.0) {
        let z = Complex64::from_polar(r, theta);
        let res = lerch_phi(z, s, a, 1e-10).unwrap();
        let longer = lerch_phi_terms(z, s, a, 2 * res.terms_used);
        prop_assert!(res.tail_bound < 1e-10);
        prop_assert!((longer - res.value).norm() <= res.tail_bound + 1e-14);
    }

    #[test]
    fn lerch_tail_bound_on_unit_circle(theta in 0.3f64..6.0, s in 1.0f64..3.0, a in 0.2f64..3.0) {
        let z = Complex64::from_polar(1.0, theta);
        let res = lerch_phi(z, s, a, 1e-4).unwrap();
        let longer = lerch_phi_terms(z, s, a, 2 * res.terms_used);
        prop_assert!((longer - res.value).norm() <= res.tail_bound + 1e-12);
    }
}
