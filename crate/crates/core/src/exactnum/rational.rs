use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always stored reduced with a positive
/// denominator (`0` is `0/1`).
pub type ExactRational = BigRational;

/// Parses `"p/q"`, `"p"`, or a finite decimal such as `"-0.25"`.
pub fn parse_rational(text: &str) -> Result<ExactRational> {
    let t = text.trim();
    if t.is_empty() {
        return Err(Error::InvalidParameter("empty rational".into()));
    }
    if let Some((int_part, frac_part)) = t.split_once('.') {
        if frac_part.is_empty() || !frac_part.chars().all(|c| c.is_ascii_digit()) {
            return Err(Error::InvalidParameter(format!("cannot parse rational '{t}'")));
        }
        let negative = int_part.starts_with('-');
        let digits = format!("{}{}", int_part.trim_start_matches(['-', '+']), frac_part);
        let numer = BigInt::from_str(&digits)
            .map_err(|_| Error::InvalidParameter(format!("cannot parse rational '{t}'")))?;
        let denom = num_traits::pow(BigInt::from(10), frac_part.len());
        let r = BigRational::new(numer, denom);
        return Ok(if negative { -r } else { r });
    }
    let r = BigRational::from_str(t)
        .map_err(|_| Error::InvalidParameter(format!("cannot parse rational '{t}'")))?;
    Ok(r)
}

/// Canonical text form: `"p"` for integers, `"p/q"` otherwise.
pub fn render_rational(r: &ExactRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Nearest `f64`, falling back to a scaled division for huge operands.
pub fn rational_to_f64(r: &ExactRational) -> f64 {
    if let Some(v) = r.to_f64() {
        if v.is_finite() {
            return v;
        }
    }
    let n = r.numer().to_f64().unwrap_or(f64::INFINITY);
    let d = r.denom().to_f64().unwrap_or(f64::INFINITY);
    if n.is_finite() && d.is_finite() {
        n / d
    } else {
        // Shift both sides down to a representable range.
        let shift = r.numer().bits().max(r.denom().bits()).saturating_sub(1000);
        let n = (r.numer().abs() >> shift).to_f64().unwrap_or(f64::INFINITY);
        let d = (r.denom() >> shift).to_f64().unwrap_or(f64::INFINITY);
        let v = n / d;
        if r.is_negative() {
            -v
        } else {
            v
        }
    }
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Row `n` of Pascal's triangle, built additively.
pub fn binomial_row(n: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(BigInt::one());
        for w in row.windows(2) {
            next.push(&w[0] + &w[1]);
        }
        next.push(BigInt::one());
        row = next;
    }
    row
}
