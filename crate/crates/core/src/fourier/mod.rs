//! Fourier coefficients of the antiperiodic extension of `H_m(x,u)`.
//!
//! On `[0, 1)` the extension satisfies `f(x + 1) = -f(x)`, so only odd
//! harmonics `e^{(2n+1) pi i x}` appear. The coefficients are exact
//! polynomials in `w = 1/((2n+1) pi i)` obtained by integrating by parts;
//! a composite Gauss–Legendre quadrature of the defining integral serves as
//! the independent check.

mod quadrature;
mod wpoly;

use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub use quadrature::{composite, initial_panels, oscillatory_integral, MAX_PANELS, NODES_PER_PANEL};
pub use wpoly::{NumericWPoly, WPolynomial};

use crate::error::{Error, Result};
use crate::exactnum::{factorial, rational_to_f64, render_rational, ExactRational, URational};
use crate::frobenius::{fe_polynomial, FrobeniusNumberTable};
use crate::parallel::Backend;
use crate::report::{fmt_real, CheckClass, VerificationReport, Verdict};

/// Complex numbers in double precision.
pub type ComplexValue = Complex64;

fn check_table(m: usize, table: &FrobeniusNumberTable) -> Result<()> {
    if m > table.max_index() {
        return Err(Error::TableTooShort {
            needed: m,
            available: table.max_index(),
        });
    }
    Ok(())
}

/// `a^{(m)}(u)` in the `w`-basis, from `a^{(0)} = 2w` and
/// `a^{(m)} = (u+1) H_m(u) w + m w a^{(m-1)}`.
pub fn fourier_coeff_exact(m: usize, table: &FrobeniusNumberTable) -> Result<WPolynomial> {
    check_table(m, table)?;
    let u_plus_one = &URational::u() + &URational::one();
    let mut coeff = WPolynomial::new(vec![URational::from_int(2)]);
    for k in 1..=m {
        let boundary = WPolynomial::new(vec![&u_plus_one * &table.values()[k]]);
        coeff = boundary.add(&coeff.shift().scale(&URational::from_int(k as i64)));
    }
    Ok(coeff)
}

/// Unrolled form: `c_j = m!/(m+1-j)! (u+1) H_{m+1-j}(u)` for `1 <= j <= m`
/// and `c_{m+1} = 2 m!`.
pub fn fourier_coeff_closed_form(m: usize, table: &FrobeniusNumberTable) -> Result<WPolynomial> {
    check_table(m, table)?;
    let u_plus_one = &URational::u() + &URational::one();
    let m_fact = factorial(m);
    let mut coeffs: Vec<URational> = (1..=m)
        .map(|j| {
            let ratio = BigRational::new(m_fact.clone(), factorial(m + 1 - j));
            (&u_plus_one * &table.values()[m + 1 - j]).scale(&ratio)
        })
        .collect();
    coeffs.push(URational::constant(BigRational::from_integer(m_fact * BigInt::from(2))));
    Ok(WPolynomial::new(coeffs))
}

/// Numeric `a_n^{(m)}(u)` from its `w`-basis form.
pub fn fourier_coeff_eval(c: &WPolynomial, n: i64, u_val: &ExactRational) -> Result<ComplexValue> {
    if u_val.is_one() {
        return Err(Error::PoleAtUOne);
    }
    Ok(c.numeric(u_val)?.eval(n))
}

/// `H_m(x, u)` at a rational `u`, as `f64` coefficients in `x`.
pub fn numeric_polynomial(m: usize, u_val: &ExactRational, table: &FrobeniusNumberTable) -> Result<Vec<f64>> {
    if u_val.is_one() {
        return Err(Error::PoleAtUOne);
    }
    let poly = fe_polynomial(m, table)?.specialize_u(u_val)?;
    Ok((0..=m).map(|k| rational_to_f64(&poly.coeff(k))).collect())
}

/// Quadrature of `int_0^1 H_m(x,u) e^{-(2n+1) pi i x} dx` to absolute
/// accuracy `tol`.
pub fn fourier_coeff_quadrature(
    m: usize,
    n: i64,
    u_val: &ExactRational,
    tol: f64,
    table: &FrobeniusNumberTable,
) -> Result<ComplexValue> {
    fourier_coeff_quadrature_with(Backend::default(), m, n, u_val, tol, table)
}

pub fn fourier_coeff_quadrature_with(
    backend: Backend,
    m: usize,
    n: i64,
    u_val: &ExactRational,
    tol: f64,
    table: &FrobeniusNumberTable,
) -> Result<ComplexValue> {
    if tol.is_nan() || tol < 1e-13 {
        return Err(Error::InvalidParameter(format!("quadrature tolerance {tol:e} below 1e-13")));
    }
    let poly = numeric_polynomial(m, u_val, table)?;
    oscillatory_integral(&poly, n, tol, backend)
}

/// `e^{(2n+1) pi i x}` with the phase reduced modulo `2 pi` first.
pub(crate) fn harmonic(n: i64, x: f64) -> Complex64 {
    let turns = ((2 * n + 1) as f64 * x).rem_euclid(2.0);
    Complex64::from_polar(1.0, turns * std::f64::consts::PI)
}

/// `sum_{n=-N}^{N-1} a_n e^{(2n+1) pi i x}` for numeric coefficients,
/// summed in increasing `n`.
pub fn partial_sum_numeric(coeffs: &NumericWPoly, x: f64, big_n: usize, backend: Backend) -> ComplexValue {
    let n = big_n as i64;
    let terms = backend.map_range(-n..n, |k| coeffs.eval(k) * harmonic(k, x));
    terms.into_iter().fold(Complex64::zero(), |acc, t| acc + t)
}

/// Symmetric partial sum of the Fourier series of `H_m(x,u)` over
/// `n = -N..N-1`. `N = 0` gives zero.
pub fn partial_sum(m: usize, u_val: &ExactRational, x: f64, big_n: usize, table: &FrobeniusNumberTable) -> Result<ComplexValue> {
    partial_sum_with(Backend::default(), m, u_val, x, big_n, table)
}

pub fn partial_sum_with(
    backend: Backend,
    m: usize,
    u_val: &ExactRational,
    x: f64,
    big_n: usize,
    table: &FrobeniusNumberTable,
) -> Result<ComplexValue> {
    if u_val.is_one() {
        return Err(Error::PoleAtUOne);
    }
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::InvalidParameter(format!("x = {x} outside [0, 1]")));
    }
    let coeffs = fourier_coeff_exact(m, table)?.numeric(u_val)?;
    let s = partial_sum_numeric(&coeffs, x, big_n, backend);
    if !(s.re.is_finite() && s.im.is_finite()) {
        return Err(Error::NonFinite(format!("partial sum at m = {m}, x = {x}, N = {big_n}")));
    }
    Ok(s)
}

/// `int_0^1 H_m(x,u)^2 dx`, exactly, for rational `u`.
pub fn l2_norm_squared(m: usize, u_val: &ExactRational, table: &FrobeniusNumberTable) -> Result<ExactRational> {
    let p = fe_polynomial(m, table)?.specialize_u(u_val)?;
    let sq = &p * &p;
    Ok(sq
        .coeffs()
        .iter()
        .enumerate()
        .fold(ExactRational::zero(), |acc, (k, c)| acc + c / BigRational::from_integer(BigInt::from(k + 1))))
}

/// Grid and thresholds for [`verify_fourier`].
#[derive(Debug, Clone)]
pub struct FourierParams {
    /// Orders for the convergence checks.
    pub m_values: Vec<usize>,
    /// Coefficient checks run over `m = 0..=coeff_m_max`.
    pub coeff_m_max: usize,
    pub u_samples: Vec<ExactRational>,
    pub x_samples: Vec<ExactRational>,
    /// Strictly increasing truncation orders.
    pub n_schedule: Vec<usize>,
    /// Frequency window `lo..hi` for the coefficient comparison.
    pub n_window: (i64, i64),
    pub coeff_tol: f64,
    pub convergence_tol: f64,
    pub corollary1_n: usize,
    pub corollary1_tol: f64,
    /// Bound on `|Im|` of partial sums at real `u` and `x`.
    pub imag_tol: f64,
    pub backend: Backend,
}

impl Default for FourierParams {
    fn default() -> Self {
        let q = |n: i64, d: i64| BigRational::new(n.into(), d.into());
        FourierParams {
            m_values: vec![3, 5],
            coeff_m_max: 6,
            u_samples: vec![q(-3, 1), q(-1, 1), q(1, 3), q(1, 2), q(2, 1)],
            x_samples: vec![q(1, 4), q(1, 3), q(1, 2), q(2, 3)],
            n_schedule: vec![64, 256, 1024, 8192],
            n_window: (-6, 6),
            coeff_tol: 1e-10,
            convergence_tol: 5e-2,
            corollary1_n: 64,
            corollary1_tol: 1e-8,
            imag_tol: 1e-10,
            backend: Backend::default(),
        }
    }
}

impl FourierParams {
    fn validate(&self) -> Result<()> {
        if self.n_schedule.is_empty() || self.n_schedule.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidParameter("N schedule must be nonempty and strictly increasing".into()));
        }
        if self.u_samples.iter().any(One::is_one) {
            return Err(Error::InvalidParameter("u = 1 is a pole".into()));
        }
        let zero = ExactRational::zero();
        let one = ExactRational::one();
        if self.x_samples.iter().any(|x| *x <= zero || *x >= one) {
            return Err(Error::InvalidParameter("x samples must lie strictly inside (0, 1)".into()));
        }
        let deepest = self.m_values.iter().copied().max().unwrap_or(0).max(self.coeff_m_max);
        if deepest > 40 {
            return Err(Error::InvalidParameter(format!("m = {deepest} exceeds the numeric range (40)")));
        }
        if self.n_window.0 >= self.n_window.1 {
            return Err(Error::InvalidParameter("empty frequency window".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FourierCheck {
    WBasisStructure,
    CoeffConsistency,
    Theorem1Convergence,
    Corollary1,
    Corollary3X1,
}

impl FourierCheck {
    pub const ALL: [FourierCheck; 5] = [
        FourierCheck::WBasisStructure,
        FourierCheck::CoeffConsistency,
        FourierCheck::Theorem1Convergence,
        FourierCheck::Corollary1,
        FourierCheck::Corollary3X1,
    ];

    pub fn id(self) -> &'static str {
        match self {
            FourierCheck::WBasisStructure => "wbasis-structure",
            FourierCheck::CoeffConsistency => "coeff-consistency",
            FourierCheck::Theorem1Convergence => "theorem1",
            FourierCheck::Corollary1 => "corollary1",
            FourierCheck::Corollary3X1 => "eq13-corollary3",
        }
    }

    pub fn class(self) -> CheckClass {
        match self {
            FourierCheck::Corollary3X1 => CheckClass::Reported,
            _ => CheckClass::PassFail,
        }
    }
}

impl FromStr for FourierCheck {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "theorem1-convergence" => Ok(FourierCheck::Theorem1Convergence),
            "corollary3-x1" => Ok(FourierCheck::Corollary3X1),
            _ => FourierCheck::ALL
                .into_iter()
                .find(|c| c.id() == s)
                .ok_or_else(|| Error::UnknownIdentity(s.to_string())),
        }
    }
}

fn fmt_complex(z: Complex64) -> String {
    format!("{} + {}i", fmt_real(z.re), fmt_real(z.im))
}

/// Errors `|S_N(x) - H_m(x,u)|` along the schedule, plus the largest
/// imaginary part seen.
fn convergence_errors(
    m: usize,
    u: &ExactRational,
    x: &ExactRational,
    schedule: &[usize],
    table: &FrobeniusNumberTable,
    backend: Backend,
) -> Result<(f64, Vec<f64>, f64)> {
    let exact = rational_to_f64(&crate::frobenius::fe_eval(&fe_polynomial(m, table)?, u, x)?);
    let coeffs = fourier_coeff_exact(m, table)?.numeric(u)?;
    let xf = rational_to_f64(x);
    let mut errors = Vec::with_capacity(schedule.len());
    let mut max_imag: f64 = 0.0;
    for &big_n in schedule {
        let s = partial_sum_numeric(&coeffs, xf, big_n, backend);
        errors.push((s.re - exact).hypot(s.im));
        max_imag = max_imag.max(s.im.abs());
    }
    Ok((exact, errors, max_imag))
}

/// Runs one Fourier-side check over the parameter grid.
pub fn verify_fourier(
    id: FourierCheck,
    params: &FourierParams,
    table: &FrobeniusNumberTable,
) -> Result<Vec<VerificationReport>> {
    params.validate()?;
    let key = id.id();
    let class = id.class();
    let backend = params.backend;
    let mut reports = Vec::new();
    match id {
        FourierCheck::WBasisStructure => {
            let m_max = params.coeff_m_max;
            let minus_one = -ExactRational::one();
            let u_plus_one = &URational::u() + &URational::one();
            for m in 0..=m_max {
                let rec = fourier_coeff_exact(m, table)?;
                let closed = fourier_coeff_closed_form(m, table)?;
                let top = BigRational::from_integer(factorial(m) * BigInt::from(2));
                let mut problems = Vec::new();
                if rec != closed {
                    problems.push("recursion differs from closed form".to_string());
                }
                if rec.top_index() != m + 1 || rec.coeff(m + 1) != URational::constant(top.clone()) {
                    problems.push("top coefficient is not 2*m!".to_string());
                }
                let expected_c1 = if m == 0 {
                    URational::from_int(2)
                } else {
                    &u_plus_one * &table.values()[m]
                };
                if rec.coeff(1) != expected_c1 {
                    problems.push("c_1 is not (u+1)*H_m(u)".to_string());
                }
                let at_minus_one: Vec<ExactRational> = (1..=m + 1)
                    .map(|j| rec.coeff(j).eval(&minus_one))
                    .collect::<Result<_>>()?;
                let only_top = at_minus_one[..m].iter().all(Zero::is_zero) && at_minus_one[m] == top;
                if !only_top {
                    problems.push("u = -1 specialization keeps lower terms".to_string());
                }
                let residual = (!problems.is_empty()).then(|| problems.join("; "));
                reports.push(
                    VerificationReport::exact(
                        key,
                        class,
                        crate::report::render_compact(&rec.to_string(), crate::frobenius::RENDER_LIMIT),
                        crate::report::render_compact(&closed.to_string(), crate::frobenius::RENDER_LIMIT),
                        residual,
                    )
                    .with_param("m", m)
                    .with_notes(format!("u = -1 leaves {}*w^{}", render_rational(&top), m + 1)),
                );
            }
        }
        FourierCheck::CoeffConsistency => {
            let m_max = params.coeff_m_max;
            let (lo, hi) = params.n_window;
            let mut cells = Vec::new();
            for m in 0..=m_max {
                for u in &params.u_samples {
                    cells.push((m, u.clone()));
                }
            }
            let results = backend.map_slice(&cells, |(m, u)| -> Result<(f64, i64)> {
                let exact = fourier_coeff_exact(*m, table)?.numeric(u)?;
                let poly = numeric_polynomial(*m, u, table)?;
                let mut worst = (0.0_f64, lo);
                for n in lo..hi {
                    let quad = oscillatory_integral(&poly, n, (params.coeff_tol * 1e-2).max(1e-13), Backend::Sequential)?;
                    let d = (exact.eval(n) - quad).norm();
                    if d > worst.0 || d.is_nan() {
                        worst = (d, n);
                    }
                }
                Ok(worst)
            });
            for ((m, u), res) in cells.iter().zip(results) {
                let (worst, at_n) = res?;
                reports.push(
                    VerificationReport::numeric(
                        key,
                        class,
                        "w-basis coefficients".into(),
                        "Gauss-Legendre quadrature".into(),
                        worst,
                        params.coeff_tol,
                    )
                    .with_param("m", m)
                    .with_param("u", render_rational(u))
                    .with_param("n_range", format!("{lo}..{hi}"))
                    .with_notes(format!("max |exact - quadrature| attained at n = {at_n}")),
                );
            }
        }
        FourierCheck::Theorem1Convergence => {
            let mut cells = Vec::new();
            for &m in params.m_values.iter().filter(|&&m| m >= 1) {
                for u in params.u_samples.iter().filter(|u| **u != -ExactRational::one()) {
                    for x in &params.x_samples {
                        cells.push((m, u.clone(), x.clone()));
                    }
                }
            }
            let results = Backend::Sequential.map_slice(&cells, |(m, u, x)| {
                convergence_errors(*m, u, x, &params.n_schedule, table, backend)
            });
            for ((m, u, x), res) in cells.iter().zip(results) {
                let (exact, errors, max_imag) = res?;
                let first = errors[0];
                let last = *errors.last().expect("nonempty schedule");
                let ok = last < first && last < params.convergence_tol && max_imag < params.imag_tol;
                let verdict = if ok { Verdict::Pass } else { Verdict::Fail };
                reports.push(
                    VerificationReport::numeric(
                        key,
                        class,
                        format!("S_N(x) with N = {}", params.n_schedule.last().unwrap()),
                        format!("H_m(x,u) = {}", fmt_real(exact)),
                        last,
                        params.convergence_tol,
                    )
                    .with_verdict(verdict)
                    .with_param("m", m)
                    .with_param("u", render_rational(u))
                    .with_param("x", render_rational(x))
                    .with_notes(format!(
                        "errors along N = {:?}: [{}]; max |Im| = {}",
                        params.n_schedule,
                        errors.iter().map(|e| fmt_real(*e)).collect::<Vec<_>>().join(", "),
                        fmt_real(max_imag)
                    )),
                );
            }
        }
        FourierCheck::Corollary1 => {
            let minus_one = -ExactRational::one();
            for &m in params.m_values.iter().filter(|&&m| m >= 3) {
                for x in &params.x_samples {
                    let (exact, errors, max_imag) =
                        convergence_errors(m, &minus_one, x, &[params.corollary1_n], table, backend)?;
                    let err = errors[0];
                    let ok = err < params.corollary1_tol && max_imag < params.imag_tol;
                    reports.push(
                        VerificationReport::numeric(
                            key,
                            class,
                            format!("2*m!*sum w^(m+1) e^((2n+1)pi i x), N = {}", params.corollary1_n),
                            format!("E_m(x) = {}", fmt_real(exact)),
                            err,
                            params.corollary1_tol,
                        )
                        .with_verdict(if ok { Verdict::Pass } else { Verdict::Fail })
                        .with_param("m", m)
                        .with_param("u", "-1")
                        .with_param("x", render_rational(x))
                        .with_notes(format!("max |Im| = {}", fmt_real(max_imag))),
                    );
                }
            }
        }
        FourierCheck::Corollary3X1 => {
            for &m in params.m_values.iter().filter(|&&m| m >= 1) {
                for u in &params.u_samples {
                    let h_m = table.get(m)?.eval(u)?;
                    let claim = rational_to_f64(&(u * &h_m));
                    let midpoint = rational_to_f64(&((u - ExactRational::one()) * &h_m / BigRational::from_integer(2.into())));
                    let coeffs = fourier_coeff_exact(m, table)?.numeric(u)?;
                    let sums: Vec<Complex64> = params
                        .n_schedule
                        .iter()
                        .map(|&big_n| partial_sum_numeric(&coeffs, 1.0, big_n, backend))
                        .collect();
                    let limit = *sums.last().expect("nonempty schedule");
                    let drift = if sums.len() >= 2 { (limit - sums[sums.len() - 2]).norm() } else { f64::NAN };
                    let residual_claim = (limit - claim).norm();
                    let residual_mid = (limit - midpoint).norm();
                    reports.push(
                        VerificationReport::numeric(
                            key,
                            class,
                            format!("S_N(1) = {}", fmt_complex(limit)),
                            format!("u*H_m(u) = {}", fmt_real(claim)),
                            residual_claim,
                            params.coeff_tol,
                        )
                        .with_param("m", m)
                        .with_param("u", render_rational(u))
                        .with_param("x", "1")
                        .with_notes(format!(
                            "limit estimate {} (last-step drift {}); jump midpoint (u-1)*H_m(u)/2 = {}, residual {}",
                            fmt_real(limit.re),
                            fmt_real(drift),
                            fmt_real(midpoint),
                            fmt_real(residual_mid)
                        )),
                    );
                }
            }
        }
    }
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frobenius::fe_number_table;
    use std::f64::consts::PI;

    fn q(n: i64, d: i64) -> ExactRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn base_coefficient() {
        let t = fe_number_table(3);
        let c = fourier_coeff_exact(0, &t).unwrap();
        assert_eq!(c, WPolynomial::new(vec![URational::from_int(2)]));
        let v = fourier_coeff_eval(&c, 0, &q(2, 1)).unwrap();
        assert!((v - Complex64::new(0.0, -2.0 / PI)).norm() < 1e-15);
    }

    #[test]
    fn first_order_coefficient() {
        let t = fe_number_table(3);
        let c = fourier_coeff_exact(1, &t).unwrap();
        let u_plus_one = &URational::u() + &URational::one();
        assert_eq!(c.coeff(1), &u_plus_one * &t.values()[1]);
        assert_eq!(c.coeff(2), URational::from_int(2));
        for n in 0..3 {
            let exact = fourier_coeff_eval(&c, n, &q(2, 1)).unwrap();
            let quad = fourier_coeff_quadrature(1, n, &q(2, 1), 1e-13, &t).unwrap();
            assert!((exact - quad).norm() < 1e-12);
        }
    }

    #[test]
    fn euler_case_has_single_term() {
        let t = fe_number_table(8);
        let v = fourier_coeff_eval(&fourier_coeff_exact(3, &t).unwrap(), 0, &q(-1, 1)).unwrap();
        assert!((v - Complex64::new(12.0 / PI.powi(4), 0.0)).norm() < 1e-15);
        assert!((v.re - 0.123192).abs() < 1e-6);
        let quad = fourier_coeff_quadrature(2, 0, &q(-1, 1), 1e-13, &t).unwrap();
        assert!((quad - Complex64::new(0.0, 4.0 / PI.powi(3))).norm() < 1e-12);
    }

    #[test]
    fn conjugate_symmetry() {
        let t = fe_number_table(5);
        let c = fourier_coeff_exact(5, &t).unwrap();
        for n in 0..10 {
            let a = fourier_coeff_eval(&c, n, &q(1, 3)).unwrap();
            let b = fourier_coeff_eval(&c, -n - 1, &q(1, 3)).unwrap();
            assert!((a - b.conj()).norm() <= 1e-15 * a.norm().max(1.0));
        }
    }

    #[test]
    fn partial_sum_edge_cases() {
        let t = fe_number_table(3);
        assert_eq!(partial_sum(2, &q(2, 1), 0.3, 0, &t).unwrap(), Complex64::zero());
        for big_n in [1, 7, 64] {
            let s = partial_sum(1, &q(-1, 1), 0.5, big_n, &t).unwrap();
            assert!(s.norm() < 1e-15, "N = {big_n}: {s}");
        }
        let s = partial_sum(0, &q(2, 1), 0.5, 4096, &t).unwrap();
        assert!((s.re - 1.0).abs() < 1e-3);
        assert!(matches!(partial_sum(1, &q(1, 1), 0.5, 4, &t), Err(Error::PoleAtUOne)));
    }

    #[test]
    fn backends_give_identical_sums() {
        let t = fe_number_table(5);
        let a = partial_sum_with(Backend::Sequential, 5, &q(2, 1), 1.0 / 3.0, 2048, &t).unwrap();
        let b = partial_sum_with(Backend::Parallel, 5, &q(2, 1), 1.0 / 3.0, 2048, &t).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn quadrature_rejects_tiny_tolerance_and_pole() {
        let t = fe_number_table(2);
        assert!(matches!(fourier_coeff_quadrature(1, 0, &q(2, 1), 1e-15, &t), Err(Error::InvalidParameter(_))));
        assert!(matches!(fourier_coeff_quadrature(1, 0, &q(1, 1), 1e-10, &t), Err(Error::PoleAtUOne)));
    }

    #[test]
    fn table_too_short() {
        let t = fe_number_table(2);
        assert!(matches!(fourier_coeff_exact(3, &t), Err(Error::TableTooShort { .. })));
    }
}
