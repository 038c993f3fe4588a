//! Stirling numbers of the second kind, a set-partition enumerator used as
//! their oracle, and the `1/(1 - u e^{-t})` expansion identities.

use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{factorial, rat_normalize, render_rational, ExactRational, PowerSeries, UPolynomial, URational};
use crate::frobenius::{fe_number_table, EulerSequence, FrobeniusNumberTable, RENDER_LIMIT};
use crate::report::{render_compact, CheckClass, VerificationReport};

/// Largest set size the brute-force enumerator accepts.
pub const ENUMERATION_BOUND: usize = 12;

/// Triangle `S2(m, n)` for `0 <= n <= m <= m_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stirling2Table {
    rows: Vec<Vec<BigUint>>,
}

impl Stirling2Table {
    pub fn m_max(&self) -> usize {
        self.rows.len() - 1
    }

    /// `S2(m, n)`, zero when `n > m`.
    pub fn get(&self, m: usize, n: usize) -> BigUint {
        self.rows
            .get(m)
            .and_then(|row| row.get(n))
            .cloned()
            .unwrap_or_else(BigUint::zero)
    }

    pub fn row(&self, m: usize) -> &[BigUint] {
        &self.rows[m]
    }

    pub fn bell(&self, m: usize) -> BigUint {
        self.rows[m].iter().sum()
    }
}

/// `S2(m,n) = n S2(m-1,n) + S2(m-1,n-1)`.
pub fn stirling2_table(m_max: usize) -> Stirling2Table {
    let mut rows = vec![vec![BigUint::one()]];
    for m in 1..=m_max {
        let prev = &rows[m - 1];
        let row = (0..=m)
            .map(|n| {
                let stay = if n < m { prev[n].clone() * BigUint::from(n) } else { BigUint::zero() };
                let fresh = if n >= 1 { prev[n - 1].clone() } else { BigUint::zero() };
                stay + fresh
            })
            .collect();
        rows.push(row);
    }
    Stirling2Table { rows }
}

/// Counts set partitions of `{1..m}` by number of blocks, enumerating every
/// restricted-growth string `a_1 = 0, a_i <= 1 + max(a_1..a_{i-1})`.
/// Entry `k` of the result is the number of partitions into `k` blocks.
pub fn partition_counts(m: usize) -> Result<Vec<u64>> {
    if m > ENUMERATION_BOUND {
        return Err(Error::EnumerationBound {
            m,
            n: 0,
            bound: ENUMERATION_BOUND,
        });
    }
    let mut counts = vec![0u64; m + 1];
    if m == 0 {
        counts[0] = 1;
        return Ok(counts);
    }
    fn walk(pos: usize, m: usize, blocks: usize, counts: &mut [u64]) {
        if pos == m {
            counts[blocks] += 1;
            return;
        }
        // join an existing block or open a new one
        for _ in 0..blocks {
            walk(pos + 1, m, blocks, counts);
        }
        walk(pos + 1, m, blocks + 1, counts);
    }
    walk(1, m, 1, &mut counts);
    Ok(counts)
}

/// Number of partitions of an `m`-set into exactly `n` nonempty blocks, by
/// explicit enumeration.
pub fn stirling2_bruteforce(m: usize, n: usize) -> Result<u64> {
    if n > m || m > ENUMERATION_BOUND {
        return Err(Error::EnumerationBound {
            m,
            n,
            bound: ENUMERATION_BOUND,
        });
    }
    Ok(partition_counts(m)?[n])
}

/// `r(1/u)` in canonical form.
pub fn substitute_inverse_u(r: &URational) -> URational {
    let num = r.numer();
    let den = r.denom();
    let (Some(dn), Some(dd)) = (num.degree(), den.degree()) else {
        return r.clone();
    };
    let top = dn.max(dd);
    // r(1/u) = (u^top N(1/u)) / (u^top D(1/u))
    let new_num = num.reversed().shift_up(top - dn);
    let new_den = den.reversed().shift_up(top - dd);
    rat_normalize(new_num, new_den).expect("reversed nonzero polynomial is nonzero")
}

fn one_minus_u() -> URational {
    URational::from_poly(UPolynomial::from_ints(&[1, -1]))
}

/// Exact expansion of `1/(1 - u e^{-t})` up to `t^order`.
pub fn inverse_one_minus_u_exp(order: usize) -> PowerSeries<URational> {
    let series = PowerSeries::one(order).sub(&PowerSeries::exp_linear(&URational::from_int(-1), order).scale(&URational::u()));
    series.reciprocal().expect("constant term 1 - u is nonzero")
}

/// `sum_{n=0}^{m} n! u^n S2(m,n)`.
pub fn theorem3_rhs(m: usize, s2: &Stirling2Table) -> UPolynomial {
    UPolynomial::new(
        (0..=m)
            .map(|n| BigRational::from_integer(factorial(n) * BigInt::from(s2.get(m, n))))
            .collect(),
    )
}

/// `2 sum_{n=0}^{m} n! (-1)^n S2(m,n)`.
pub fn corollary4_rhs(m: usize, s2: &Stirling2Table) -> ExactRational {
    let sum = (0..=m).fold(BigInt::zero(), |acc, n| {
        let term = factorial(n) * BigInt::from(s2.get(m, n));
        if n % 2 == 0 {
            acc + term
        } else {
            acc - term
        }
    });
    BigRational::from_integer(sum * 2)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StirlingCheck {
    Triangle,
    Eq10Factorization,
    CrossIdentity,
    Theorem3,
    Corollary4,
}

impl StirlingCheck {
    pub const ALL: [StirlingCheck; 5] = [
        StirlingCheck::Triangle,
        StirlingCheck::Eq10Factorization,
        StirlingCheck::CrossIdentity,
        StirlingCheck::Theorem3,
        StirlingCheck::Corollary4,
    ];

    pub fn id(self) -> &'static str {
        match self {
            StirlingCheck::Triangle => "stirling-triangle",
            StirlingCheck::Eq10Factorization => "eq10",
            StirlingCheck::CrossIdentity => "stirling-cross",
            StirlingCheck::Theorem3 => "theorem3",
            StirlingCheck::Corollary4 => "corollary4",
        }
    }

    pub fn class(self) -> CheckClass {
        match self {
            StirlingCheck::Theorem3 | StirlingCheck::Corollary4 => CheckClass::Reported,
            _ => CheckClass::PassFail,
        }
    }
}

impl FromStr for StirlingCheck {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "eq10-factorization" => Ok(StirlingCheck::Eq10Factorization),
            _ => StirlingCheck::ALL
                .into_iter()
                .find(|c| c.id() == s)
                .ok_or_else(|| Error::UnknownIdentity(s.to_string())),
        }
    }
}

fn compact(v: &impl ToString) -> String {
    render_compact(&v.to_string(), RENDER_LIMIT)
}

fn nonzero_text(diff: &URational) -> Option<String> {
    (!diff.is_zero()).then(|| compact(diff))
}

pub fn verify_stirling(id: StirlingCheck, m_max: usize) -> Result<Vec<VerificationReport>> {
    verify_stirling_with(id, m_max, &fe_number_table(m_max))
}

/// Runs one check for every `m` up to `m_max`: `0..=m_max` for the
/// pass/fail checks, `1..=m_max` for the transcribed claims.
pub fn verify_stirling_with(
    id: StirlingCheck,
    m_max: usize,
    table: &FrobeniusNumberTable,
) -> Result<Vec<VerificationReport>> {
    if m_max < 1 {
        return Err(Error::InvalidParameter("m_max must be at least 1".into()));
    }
    if table.max_index() < m_max {
        return Err(Error::TableTooShort {
            needed: m_max,
            available: table.max_index(),
        });
    }
    let key = id.id();
    let class = id.class();
    let s2 = stirling2_table(m_max);
    let mut reports = Vec::new();
    match id {
        StirlingCheck::Triangle => {
            for m in 0..=m_max {
                let counts = partition_counts(m)?;
                let row: Vec<String> = s2.row(m).iter().map(ToString::to_string).collect();
                let enumerated: Vec<String> = counts.iter().map(ToString::to_string).collect();
                let bell_enum: u64 = counts.iter().sum();
                let rows_match = row == enumerated;
                let bell_match = s2.bell(m) == BigUint::from(bell_enum);
                let residual = (!(rows_match && bell_match)).then(|| "rows differ".to_string());
                reports.push(
                    VerificationReport::exact(
                        key,
                        class,
                        format!("S2({m},·) = [{}]; Bell = {}", row.join(", "), s2.bell(m)),
                        format!("enumerated = [{}]; Bell = {bell_enum}", enumerated.join(", ")),
                        residual,
                    )
                    .with_param("m", m)
                    .with_notes("recurrence triangle against restricted-growth-string enumeration"),
                );
            }
        }
        StirlingCheck::Eq10Factorization => {
            let expansion = inverse_one_minus_u_exp(m_max);
            let inv_one_minus_u = URational::one().checked_div(&one_minus_u())?;
            for m in 0..=m_max {
                let lhs = expansion.egf_coeff(m);
                let mut rhs = &substitute_inverse_u(&table.values()[m]) * &inv_one_minus_u;
                if m % 2 == 1 {
                    rhs = -rhs;
                }
                let diff = &lhs - &rhs;
                reports.push(
                    VerificationReport::exact(key, class, compact(&lhs), compact(&rhs), nonzero_text(&diff))
                        .with_param("m", m)
                        .with_notes("m!*[t^m] 1/(1-u e^{-t}) against (-1)^m H_m(1/u)/(1-u)"),
                );
            }
        }
        StirlingCheck::CrossIdentity => {
            let expansion = inverse_one_minus_u_exp(m_max);
            let u_minus_one = URational::from_poly(UPolynomial::from_ints(&[-1, 1]));
            let inv_u_minus_one = URational::one().checked_div(&u_minus_one)?;
            let inv_one_minus_u = URational::one().checked_div(&one_minus_u())?;
            for m in 0..=m_max {
                // H_m(u) = sum_k k! S2(m,k) (u-1)^{-k}
                let via_s2 = (0..=m).fold(URational::zero(), |acc, k| {
                    let c = BigRational::from_integer(factorial(k) * BigInt::from(s2.get(m, k)));
                    &acc + &inv_u_minus_one.pow(k).scale(&c)
                });
                let diff_numbers = &table.values()[m] - &via_s2;
                // sum_n n^m u^n = sum_k k! S2(m,k) u^k / (1-u)^{k+1}
                let mut from_series = expansion.egf_coeff(m);
                if m % 2 == 1 {
                    from_series = -from_series;
                }
                let power_sum = (0..=m).fold(URational::zero(), |acc, k| {
                    let c = BigRational::from_integer(factorial(k) * BigInt::from(s2.get(m, k)));
                    let term = &URational::u().pow(k) * &inv_one_minus_u.pow(k + 1);
                    &acc + &term.scale(&c)
                });
                let diff_series = &from_series - &power_sum;
                let residual = match (diff_numbers.is_zero(), diff_series.is_zero()) {
                    (true, true) => None,
                    _ => Some(format!("numbers: {}; series: {}", compact(&diff_numbers), compact(&diff_series))),
                };
                reports.push(
                    VerificationReport::exact(
                        key,
                        class,
                        format!("H_m(u) = {}; (-1)^m m![t^m] = {}", compact(&table.values()[m]), compact(&from_series)),
                        format!("sum k! S2 (u-1)^-k = {}; sum k! S2 u^k/(1-u)^(k+1) = {}", compact(&via_s2), compact(&power_sum)),
                        residual,
                    )
                    .with_param("m", m)
                    .with_notes("Frobenius-Euler numbers through Stirling numbers of the second kind"),
                );
            }
        }
        StirlingCheck::Theorem3 => {
            let inv_one_minus_u = URational::one().checked_div(&one_minus_u())?;
            for m in 1..=m_max {
                let lhs = &substitute_inverse_u(&table.values()[m]) * &inv_one_minus_u;
                let rhs = URational::from_poly(theorem3_rhs(m, &s2));
                let diff = &lhs - &rhs;
                reports.push(
                    VerificationReport::exact(key, class, compact(&lhs), compact(&rhs), nonzero_text(&diff))
                        .with_param("m", m)
                        .with_notes("H_m(1/u)/(1-u) against sum_n n! u^n S2(m,n), as printed"),
                );
            }
        }
        StirlingCheck::Corollary4 => {
            let euler = EulerSequence::from_table(table)?;
            for m in 1..=m_max {
                let lhs = euler.numbers[m].clone();
                let rhs = corollary4_rhs(m, &s2);
                let diff = &lhs - &rhs;
                reports.push(
                    VerificationReport::exact(
                        key,
                        class,
                        render_rational(&lhs),
                        render_rational(&rhs),
                        (!diff.is_zero()).then(|| render_rational(&diff)),
                    )
                    .with_param("m", m)
                    .with_notes("E_m against 2 sum_n n! (-1)^n S2(m,n), as printed"),
                );
            }
        }
    }
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::{Residual, Verdict};

    fn p(c: &[i64]) -> UPolynomial {
        UPolynomial::from_ints(c)
    }

    #[test]
    fn table_small_values() {
        let t = stirling2_table(6);
        for m in 0..=6 {
            assert_eq!(t.get(m, m), BigUint::one());
        }
        for m in 1..=6 {
            assert_eq!(t.get(m, 0), BigUint::zero());
        }
        assert_eq!(t.get(4, 2), BigUint::from(7u32));
        assert_eq!(t.get(3, 2), BigUint::from(3u32));
    }

    #[test]
    fn bruteforce_small_values() {
        assert_eq!(stirling2_bruteforce(0, 0).unwrap(), 1);
        assert_eq!(stirling2_bruteforce(5, 1).unwrap(), 1);
        assert_eq!(stirling2_bruteforce(4, 2).unwrap(), 7);
        assert!(matches!(stirling2_bruteforce(13, 2), Err(Error::EnumerationBound { .. })));
        assert!(matches!(stirling2_bruteforce(3, 4), Err(Error::EnumerationBound { .. })));
    }

    #[test]
    fn inverse_substitution_examples() {
        assert_eq!(substitute_inverse_u(&URational::one()), URational::one());
        let h1 = rat_normalize(p(&[-1]), p(&[1, -1])).unwrap();
        // -1/(1 - 1/u) = -u/(u - 1)
        assert_eq!(substitute_inverse_u(&h1), rat_normalize(p(&[0, -1]), p(&[-1, 1])).unwrap());
        let h2 = rat_normalize(p(&[1, 1]), p(&[1, -1]).pow(2)).unwrap();
        let expected = rat_normalize(p(&[0, 1, 1]), p(&[-1, 1]).pow(2)).unwrap();
        assert_eq!(substitute_inverse_u(&h2), expected);
        for u in [2, 3] {
            let at = ExactRational::from_integer(u.into());
            assert_eq!(expected.eval(&at).unwrap(), h2.eval(&at.recip()).unwrap());
        }
    }

    #[test]
    fn theorem3_at_one_has_documented_residual() {
        let reports = verify_stirling(StirlingCheck::Theorem3, 1).unwrap();
        // u/(1-u)^2 - u
        let lhs = rat_normalize(p(&[0, 1]), p(&[1, -1]).pow(2)).unwrap();
        let expected = &lhs - &URational::u();
        assert_eq!(reports[0].abs_residual, Residual::Exact(expected.to_string()));
        assert_eq!(reports[0].verdict, Verdict::Reported);
        assert_eq!(reports[0].rhs_rendered, "u");
    }

    #[test]
    fn corollary4_at_one() {
        let reports = verify_stirling(StirlingCheck::Corollary4, 1).unwrap();
        assert_eq!(reports[0].lhs_rendered, "-1/2");
        assert_eq!(reports[0].rhs_rendered, "-2");
        assert_eq!(reports[0].abs_residual, Residual::Exact("3/2".into()));
    }

    #[test]
    fn eq10_and_cross_identity_pass() {
        for id in [StirlingCheck::Eq10Factorization, StirlingCheck::CrossIdentity] {
            let reports = verify_stirling(id, 10).unwrap();
            assert!(reports.iter().all(|r| r.verdict == Verdict::Pass), "{id:?}");
        }
    }
}
