use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactnum::{rational_to_f64, ExactRational, URational};

/// `sum_{j>=1} c_j(u) w^j` with `w = 1/((2n+1) pi i)`.
///
/// The frequency index `n` is not part of the value; the same polynomial
/// yields the coefficient for every `n`. `coeffs[j-1]` holds `c_j`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct WPolynomial {
    coeffs: Vec<URational>,
}

impl WPolynomial {
    pub fn new(mut coeffs: Vec<URational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        WPolynomial { coeffs }
    }

    /// `c_j`; zero outside the stored range (including `j = 0`).
    pub fn coeff(&self, j: usize) -> URational {
        if j == 0 {
            return URational::zero();
        }
        self.coeffs.get(j - 1).cloned().unwrap_or_else(URational::zero)
    }

    /// Highest power of `w` present.
    pub fn top_index(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[URational] {
        &self.coeffs
    }

    /// `w * self`.
    pub fn shift(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(URational::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        WPolynomial::new(coeffs)
    }

    pub fn scale(&self, c: &URational) -> Self {
        WPolynomial::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        WPolynomial::new((1..=n).map(|j| &self.coeff(j) + &rhs.coeff(j)).collect())
    }

    /// Coefficients evaluated at a rational `u`.
    pub fn numeric(&self, u_val: &ExactRational) -> Result<NumericWPoly> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.eval(u_val).map(|v| rational_to_f64(&v)))
            .collect::<Result<Vec<_>>>()?;
        if let Some(bad) = coeffs.iter().find(|c| !c.is_finite()) {
            return Err(Error::NonFinite(format!("w-coefficient {bad} at u = {u_val}")));
        }
        Ok(NumericWPoly { coeffs })
    }
}

impl fmt::Display for WPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                let power = if i == 0 { "w".to_string() } else { format!("w^{}", i + 1) };
                format!("({c})*{power}")
            })
            .collect();
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

impl fmt::Debug for WPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WPolynomial({self})")
    }
}

/// A [`WPolynomial`] at a fixed real `u`.
#[derive(Debug, Clone, PartialEq)]
pub struct NumericWPoly {
    coeffs: Vec<f64>,
}

impl NumericWPoly {
    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// Value at frequency index `n`.
    pub fn eval(&self, n: i64) -> Complex64 {
        let w = Complex64::new(0.0, -1.0 / ((2 * n + 1) as f64 * PI));
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::zero(), |acc, &c| (acc + c) * w)
    }
}
