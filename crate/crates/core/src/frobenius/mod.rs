//! Frobenius–Euler numbers `H_n(u)` and polynomials `H_n(x,u)`, kept exact
//! with `u` symbolic, their Euler specialization at `u = -1`, and the
//! generating-function oracle used to cross-check them.

mod xpoly;

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub use xpoly::{fe_eval, XPolynomial};

use crate::error::{Error, Result};
use crate::exactnum::{binomial_row, ExactRational, PowerSeries, UPolynomial, URational};
use crate::report::{render_compact, CheckClass, VerificationReport};

/// Longest canonical rendering stored verbatim in a report.
pub(crate) const RENDER_LIMIT: usize = 240;

/// `H_0(u), ..., H_{max_index}(u)`.
#[derive(Debug, Clone, PartialEq)]
pub struct FrobeniusNumberTable {
    values: Vec<URational>,
}

impl FrobeniusNumberTable {
    pub fn max_index(&self) -> usize {
        self.values.len() - 1
    }

    pub fn values(&self) -> &[URational] {
        &self.values
    }

    pub fn get(&self, n: usize) -> Result<&URational> {
        self.values.get(n).ok_or(Error::IndexOutOfRange {
            index: n,
            max: self.max_index(),
        })
    }

    /// `sum_{l=0}^{n} C(n,l) H_l(u) - u H_n(u)`; zero for every `n >= 1`.
    pub fn recurrence_residual(&self, n: usize) -> Result<URational> {
        let h_n = self.get(n)?;
        let row = binomial_row(n);
        let sum = binomial_sum(&row, &self.values[..=n]);
        Ok(&sum - &(&URational::u() * h_n))
    }
}

fn binomial_sum(row: &[BigInt], values: &[URational]) -> URational {
    values.iter().zip(row).fold(URational::zero(), |acc, (h, c)| {
        &acc + &h.scale(&BigRational::from_integer(c.clone()))
    })
}

/// Builds `H_0..H_{n_max}` from the recurrence
/// `H_n = (sum_{l<n} C(n,l) H_l) / (u - 1)`, `H_0 = 1`.
pub fn fe_number_table(n_max: usize) -> FrobeniusNumberTable {
    let u_minus_one = URational::from_poly(UPolynomial::from_ints(&[-1, 1]));
    let mut values = vec![URational::one()];
    for n in 1..=n_max {
        let row = binomial_row(n);
        let sum = binomial_sum(&row[..n], &values);
        let h_n = sum.checked_div(&u_minus_one).expect("u - 1 is nonzero");
        values.push(h_n);
    }
    FrobeniusNumberTable { values }
}

/// `H_n(x,u) = sum_l C(n,l) x^{n-l} H_l(u)`.
pub fn fe_polynomial(n: usize, table: &FrobeniusNumberTable) -> Result<XPolynomial> {
    if n > table.max_index() {
        return Err(Error::IndexOutOfRange {
            index: n,
            max: table.max_index(),
        });
    }
    let row = binomial_row(n);
    let coeffs = (0..=n)
        .map(|k| {
            // x^k pairs with l = n - k
            let l = n - k;
            table.values[l].scale(&BigRational::from_integer(row[l].clone()))
        })
        .collect();
    Ok(XPolynomial::new(coeffs))
}

/// Euler numbers and polynomials obtained by setting `u = -1`.
#[derive(Debug, Clone, PartialEq)]
pub struct EulerSequence {
    pub numbers: Vec<ExactRational>,
    /// `E_n(x)` as polynomials in `x` over the rationals.
    pub polynomials: Vec<UPolynomial>,
}

impl EulerSequence {
    pub fn from_table(table: &FrobeniusNumberTable) -> Result<Self> {
        let minus_one = -ExactRational::one();
        let numbers = table
            .values
            .iter()
            .map(|h| h.eval(&minus_one))
            .collect::<Result<Vec<_>>>()?;
        let polynomials = (0..=table.max_index())
            .map(|n| fe_polynomial(n, table)?.specialize_u(&minus_one))
            .collect::<Result<Vec<_>>>()?;
        Ok(EulerSequence { numbers, polynomials })
    }
}

pub fn euler_sequence(n_max: usize) -> EulerSequence {
    EulerSequence::from_table(&fe_number_table(n_max)).expect("u = -1 is not a pole")
}

/// `E_0..E_{n_max}` from the series `2/(e^t + 1)` alone.
pub fn euler_numbers_oracle(n_max: usize) -> Vec<ExactRational> {
    let half_e_plus_one = euler_denominator_series(n_max);
    let recip = half_e_plus_one.reciprocal().expect("constant term is 1");
    (0..=n_max).map(|k| recip.egf_coeff(k)).collect()
}

/// `E_n(x)` from the series `2 e^{xt}/(e^t + 1)` alone.
pub fn euler_polynomials_oracle(n_max: usize) -> Vec<UPolynomial> {
    let recip = euler_denominator_series(n_max)
        .reciprocal()
        .expect("constant term is 1")
        .map(|c| UPolynomial::constant(c.clone()));
    let series = PowerSeries::exp_linear(&UPolynomial::var(), n_max).product(&recip);
    (0..=n_max).map(|k| series.egf_coeff(k)).collect()
}

/// `(e^t + 1)/2` truncated at `order`.
fn euler_denominator_series(order: usize) -> PowerSeries<ExactRational> {
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    PowerSeries::exp_linear(&ExactRational::one(), order)
        .add(&PowerSeries::one(order))
        .scale(&half)
}

/// Expands `e^{xt} (1-u)/(e^t - u)` with the series engine and returns
/// `n!` times each `t^n` coefficient, for `n = 0..=n_max`.
pub fn gf_oracle(n_max: usize) -> Vec<XPolynomial> {
    let inv_one_minus_u = URational::one()
        .checked_div(&URational::from_poly(UPolynomial::from_ints(&[1, -1])))
        .expect("1 - u is nonzero");
    // (e^t - u) / (1 - u)
    let denominator = PowerSeries::exp_linear(&URational::one(), n_max)
        .sub(&PowerSeries::constant(URational::u(), n_max))
        .scale(&inv_one_minus_u);
    let numbers = denominator.reciprocal().expect("constant term is 1");
    let lifted = numbers.map(|c| XPolynomial::constant(c.clone()));
    let series = PowerSeries::exp_linear(&XPolynomial::x(), n_max).product(&lifted);
    (0..=n_max).map(|k| series.egf_coeff(k)).collect()
}

/// Identity checks over the exact tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FrobeniusCheck {
    RecurrenceEq26,
    Lemma1,
    Lemma1UMinusOne,
    AppellDerivative,
    OracleMatch,
    EulerSpecialization,
}

impl FrobeniusCheck {
    pub const ALL: [FrobeniusCheck; 6] = [
        FrobeniusCheck::RecurrenceEq26,
        FrobeniusCheck::Lemma1,
        FrobeniusCheck::Lemma1UMinusOne,
        FrobeniusCheck::AppellDerivative,
        FrobeniusCheck::OracleMatch,
        FrobeniusCheck::EulerSpecialization,
    ];

    /// Registry key used in reports.
    pub fn id(self) -> &'static str {
        match self {
            FrobeniusCheck::RecurrenceEq26 => "eq26",
            FrobeniusCheck::Lemma1 => "lemma1",
            FrobeniusCheck::Lemma1UMinusOne => "lemma1-u-minus-one",
            FrobeniusCheck::AppellDerivative => "appell-derivative",
            FrobeniusCheck::OracleMatch => "oracle-match",
            FrobeniusCheck::EulerSpecialization => "euler-specialization",
        }
    }

    pub fn class(self) -> CheckClass {
        match self {
            FrobeniusCheck::Lemma1UMinusOne => CheckClass::Reported,
            _ => CheckClass::PassFail,
        }
    }
}

impl FromStr for FrobeniusCheck {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "recurrence-eq26" => Ok(FrobeniusCheck::RecurrenceEq26),
            _ => FrobeniusCheck::ALL
                .into_iter()
                .find(|c| c.id() == s)
                .ok_or_else(|| Error::UnknownIdentity(s.to_string())),
        }
    }
}

fn diff_text(diff: &URational) -> Option<String> {
    (!diff.is_zero()).then(|| render_compact(&diff.to_string(), RENDER_LIMIT))
}

fn xdiff_text(diff: &XPolynomial) -> Option<String> {
    (!diff.is_zero()).then(|| render_compact(&diff.to_string(), RENDER_LIMIT))
}

fn compact(v: &impl ToString) -> String {
    render_compact(&v.to_string(), RENDER_LIMIT)
}

/// Runs one check for `n = 1..=n_max` (`0..=n_max` for the oracle
/// comparisons), building its own table.
pub fn check_frobenius(id: FrobeniusCheck, n_max: usize) -> Result<Vec<VerificationReport>> {
    check_frobenius_with(id, n_max, &fe_number_table(n_max))
}

/// As [`check_frobenius`], reusing a precomputed table of sufficient depth.
pub fn check_frobenius_with(
    id: FrobeniusCheck,
    n_max: usize,
    table: &FrobeniusNumberTable,
) -> Result<Vec<VerificationReport>> {
    if n_max < 1 {
        return Err(Error::InvalidParameter("n_max must be at least 1".into()));
    }
    if n_max > table.max_index() {
        return Err(Error::TableTooShort {
            needed: n_max,
            available: table.max_index(),
        });
    }
    let key = id.id();
    let class = id.class();
    let mut reports = Vec::new();
    match id {
        FrobeniusCheck::RecurrenceEq26 => {
            for n in 1..=n_max {
                let row = binomial_row(n);
                let lhs = binomial_sum(&row, &table.values[..=n]);
                let rhs = &URational::u() * &table.values[n];
                let diff = &lhs - &rhs;
                reports.push(
                    VerificationReport::exact(key, class, compact(&lhs), compact(&rhs), diff_text(&diff))
                        .with_param("n", n)
                        .with_notes("sum_l C(n,l) H_l(u) against u*H_n(u)"),
                );
            }
        }
        FrobeniusCheck::Lemma1 => {
            for n in 1..=n_max {
                let lhs = fe_polynomial(n, table)?.eval_x(&ExactRational::one());
                let rhs = &URational::u() * &table.values[n];
                let diff = &lhs - &rhs;
                reports.push(
                    VerificationReport::exact(key, class, compact(&lhs), compact(&rhs), diff_text(&diff))
                        .with_param("n", n)
                        .with_notes("H_n(1,u) against u*H_n(u)"),
                );
            }
        }
        FrobeniusCheck::Lemma1UMinusOne => {
            let minus_one = -ExactRational::one();
            let euler = EulerSequence::from_table(table)?;
            for n in 1..=n_max {
                let poly = fe_polynomial(n, table)?;
                let target = -euler.numbers[n].clone();
                // Parameter reading: u = -1, polynomial evaluated at x = 1.
                let at_one = fe_eval(&poly, &minus_one, &ExactRational::one())?;
                let diff_param = &at_one - &target;
                // Argument reading: x = -1 with u left symbolic.
                let at_x_minus_one = poly.eval_x(&minus_one);
                let diff_arg = &at_x_minus_one - &URational::constant(target.clone());
                let residual = (!diff_param.is_zero()).then(|| crate::exactnum::render_rational(&diff_param));
                reports.push(
                    VerificationReport::exact(
                        key,
                        class,
                        format!(
                            "H_n(1,-1) = {}; H_n(-1,u) = {}",
                            crate::exactnum::render_rational(&at_one),
                            compact(&at_x_minus_one)
                        ),
                        format!("-E_n = {}", crate::exactnum::render_rational(&target)),
                        residual,
                    )
                    .with_param("n", n)
                    .with_notes(format!(
                        "residual is for the u = -1 reading; x = -1 reading residual: {}",
                        if diff_arg.is_zero() { "0".to_string() } else { compact(&diff_arg) }
                    )),
                );
            }
        }
        FrobeniusCheck::AppellDerivative => {
            for n in 1..=n_max {
                let lhs = fe_polynomial(n, table)?.derivative();
                let rhs = fe_polynomial(n - 1, table)?.scale(&URational::from_int(n as i64));
                let diff = &lhs - &rhs;
                reports.push(
                    VerificationReport::exact(key, class, compact(&lhs), compact(&rhs), xdiff_text(&diff))
                        .with_param("n", n)
                        .with_notes("d/dx H_n(x,u) against n*H_{n-1}(x,u)"),
                );
            }
        }
        FrobeniusCheck::OracleMatch => {
            let oracle = gf_oracle(n_max);
            for (n, expected) in oracle.iter().enumerate() {
                let built = fe_polynomial(n, table)?;
                let diff = &built - expected;
                reports.push(
                    VerificationReport::exact(key, class, compact(&built), compact(expected), xdiff_text(&diff))
                        .with_param("n", n)
                        .with_notes("binomial convolution against e^{xt}(1-u)/(e^t-u) series expansion"),
                );
            }
        }
        FrobeniusCheck::EulerSpecialization => {
            let special = EulerSequence::from_table(table)?;
            let numbers = euler_numbers_oracle(n_max);
            let polys = euler_polynomials_oracle(n_max);
            for n in 0..=n_max {
                let num_diff = &special.numbers[n] - &numbers[n];
                let poly_diff = &special.polynomials[n] - &polys[n];
                let residual = match (num_diff.is_zero(), poly_diff.is_zero()) {
                    (true, true) => None,
                    _ => Some(format!(
                        "E_n: {}; E_n(x): {}",
                        crate::exactnum::render_rational(&num_diff),
                        poly_diff.render_in("x")
                    )),
                };
                reports.push(
                    VerificationReport::exact(
                        key,
                        class,
                        format!(
                            "E_n = {}; E_n(x) = {}",
                            crate::exactnum::render_rational(&special.numbers[n]),
                            render_compact(&special.polynomials[n].render_in("x"), RENDER_LIMIT)
                        ),
                        format!(
                            "E_n = {}; E_n(x) = {}",
                            crate::exactnum::render_rational(&numbers[n]),
                            render_compact(&polys[n].render_in("x"), RENDER_LIMIT)
                        ),
                        residual,
                    )
                    .with_param("n", n)
                    .with_notes("u = -1 specialization against 2/(e^t+1) and 2e^{xt}/(e^t+1)"),
                );
            }
        }
    }
    Ok(reports)
}
