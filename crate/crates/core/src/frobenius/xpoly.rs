use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{Coefficient, ExactRational, UPolynomial, URational};

/// Polynomial in `x` whose coefficients are rational functions of `u`,
/// lowest power of `x` first. The zero polynomial is empty.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct XPolynomial {
    coeffs: Vec<URational>,
}

macro_rules! by_value_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<XPolynomial> for XPolynomial {
            type Output = XPolynomial;
            fn $m(self, rhs: XPolynomial) -> XPolynomial {
                (&self).$m(&rhs)
            }
        }
    )*};
}

impl XPolynomial {
    pub fn new(mut coeffs: Vec<URational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        XPolynomial { coeffs }
    }

    pub fn constant(c: URational) -> Self {
        Self::new(vec![c])
    }

    pub fn x() -> Self {
        Self::new(vec![URational::zero(), URational::one()])
    }

    pub fn coeffs(&self) -> &[URational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> URational {
        self.coeffs.get(k).cloned().unwrap_or_else(URational::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    /// Formal derivative in `x`.
    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.scale(&BigRational::from_integer(k.into())))
                .collect(),
        )
    }

    pub fn scale(&self, c: &URational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Substitutes a rational `x`, leaving `u` symbolic.
    pub fn eval_x(&self, x: &ExactRational) -> URational {
        self.coeffs
            .iter()
            .rev()
            .fold(URational::zero(), |acc, c| &acc.scale(x) + c)
    }

    /// Substitutes a rational `u`, giving a polynomial in `x` over the
    /// rationals (returned as a [`UPolynomial`] in the variable `x`).
    pub fn specialize_u(&self, u: &ExactRational) -> Result<UPolynomial> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.eval(u))
            .collect::<Result<Vec<_>>>()?;
        Ok(UPolynomial::new(coeffs))
    }

    pub fn render(&self) -> String {
        if self.coeffs.is_empty() {
            return "0".into();
        }
        let mut terms = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let power = match k {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{k}"),
            };
            let term = if k == 0 {
                format!("({c})")
            } else if c.is_one() {
                power
            } else {
                format!("({c})*{power}")
            };
            terms.push(term);
        }
        terms.join(" + ")
    }
}

/// Exact value of `p` at rational `u` and `x`.
pub fn fe_eval(p: &XPolynomial, u_val: &ExactRational, x_val: &ExactRational) -> Result<ExactRational> {
    if u_val.is_one() {
        return Err(Error::PoleAtUOne);
    }
    Ok(p.specialize_u(u_val)?.eval(x_val))
}

impl fmt::Display for XPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for XPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "XPolynomial({self})")
    }
}

impl Add<&XPolynomial> for &XPolynomial {
    type Output = XPolynomial;
    fn add(self, rhs: &XPolynomial) -> XPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        XPolynomial::new((0..n).map(|k| &self.coeff(k) + &rhs.coeff(k)).collect())
    }
}

impl Sub<&XPolynomial> for &XPolynomial {
    type Output = XPolynomial;
    fn sub(self, rhs: &XPolynomial) -> XPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        XPolynomial::new((0..n).map(|k| &self.coeff(k) - &rhs.coeff(k)).collect())
    }
}

impl Mul<&XPolynomial> for &XPolynomial {
    type Output = XPolynomial;
    fn mul(self, rhs: &XPolynomial) -> XPolynomial {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return XPolynomial::zero();
        }
        let mut out = vec![URational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = &out[i + j] + &(a * b);
                }
            }
        }
        XPolynomial::new(out)
    }
}

impl Neg for &XPolynomial {
    type Output = XPolynomial;
    fn neg(self) -> XPolynomial {
        XPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for XPolynomial {
    type Output = XPolynomial;
    fn neg(self) -> XPolynomial {
        -&self
    }
}

by_value_ops!(Add add, Sub sub, Mul mul);

impl Zero for XPolynomial {
    fn zero() -> Self {
        XPolynomial { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for XPolynomial {
    fn one() -> Self {
        Self::constant(URational::one())
    }
}

impl Coefficient for XPolynomial {
    fn from_rational(r: ExactRational) -> Self {
        Self::constant(URational::constant(r))
    }

    fn try_inv(&self) -> Option<Self> {
        match self.degree() {
            Some(0) => self.coeffs[0].try_inv().map(Self::constant),
            _ => None,
        }
    }
}
