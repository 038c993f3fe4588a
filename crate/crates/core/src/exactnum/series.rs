use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::{factorial, Coefficient, ExactRational};
use crate::error::{Error, Result};

/// Truncated formal power series `c_0 + c_1 t + ... + c_order t^order`.
///
/// Binary operations truncate to the smaller of the two orders; nothing
/// ever extends a series past the order it was built with.
#[derive(Clone, Debug, PartialEq)]
pub struct PowerSeries<C> {
    coeffs: Vec<C>,
}

impl<C: Coefficient> PowerSeries<C> {
    /// Pads with zeros or truncates so the series has exactly `order + 1`
    /// coefficients.
    pub fn new(mut coeffs: Vec<C>, order: usize) -> Self {
        coeffs.resize(order + 1, C::zero());
        PowerSeries { coeffs }
    }

    pub fn constant(c: C, order: usize) -> Self {
        Self::new(vec![c], order)
    }

    pub fn one(order: usize) -> Self {
        Self::constant(C::one(), order)
    }

    /// `e^{c t}`: coefficients `c^k / k!`.
    pub fn exp_linear(c: &C, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut power = C::one();
        for k in 0..=order {
            let inv_fact = C::from_rational(BigRational::new(BigInt::one(), factorial(k)));
            coeffs.push(power.clone() * inv_fact);
            power = power * c.clone();
        }
        PowerSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &C {
        &self.coeffs[k]
    }

    /// `k!` times the `t^k` coefficient.
    pub fn egf_coeff(&self, k: usize) -> C {
        self.coeffs[k].clone() * C::from_rational(BigRational::from_integer(factorial(k)))
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend a truncated series");
        PowerSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn map<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> PowerSeries<D> {
        PowerSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        PowerSeries {
            coeffs: (0..=order)
                .map(|k| self.coeffs[k].clone() + rhs.coeffs[k].clone())
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        PowerSeries {
            coeffs: (0..=order)
                .map(|k| self.coeffs[k].clone() - rhs.coeffs[k].clone())
                .collect(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        self.map(|a| a.clone() * c.clone())
    }

    /// Cauchy product truncated at the smaller order.
    pub fn product(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order)
            .map(|k| {
                (0..=k).fold(C::zero(), |acc, i| {
                    let (a, b) = (&self.coeffs[i], &rhs.coeffs[k - i]);
                    if a.is_zero() || b.is_zero() {
                        acc
                    } else {
                        acc + a.clone() * b.clone()
                    }
                })
            })
            .collect();
        PowerSeries { coeffs }
    }

    /// Multiplicative inverse up to the same order.
    pub fn reciprocal(&self) -> Result<Self> {
        let inv0 = self.coeffs[0].try_inv().ok_or(Error::SeriesNotInvertible)?;
        let mut out: Vec<C> = Vec::with_capacity(self.coeffs.len());
        out.push(inv0.clone());
        for k in 1..self.coeffs.len() {
            let s = (1..=k).fold(C::zero(), |acc, i| {
                let a = &self.coeffs[i];
                if a.is_zero() {
                    acc
                } else {
                    acc + a.clone() * out[k - i].clone()
                }
            });
            out.push(-(inv0.clone() * s));
        }
        Ok(PowerSeries { coeffs: out })
    }
}

/// Free-function form of [`PowerSeries::product`].
pub fn series_product<C: Coefficient>(a: &PowerSeries<C>, b: &PowerSeries<C>) -> PowerSeries<C> {
    a.product(b)
}

/// Free-function form of [`PowerSeries::reciprocal`].
pub fn series_reciprocal<C: Coefficient>(a: &PowerSeries<C>) -> Result<PowerSeries<C>> {
    a.reciprocal()
}

/// Free-function form of [`PowerSeries::exp_linear`].
pub fn series_exp_linear<C: Coefficient>(c: &C, order: usize) -> PowerSeries<C> {
    PowerSeries::exp_linear(c, order)
}

impl PowerSeries<ExactRational> {
    pub fn from_ints(coeffs: &[i64], order: usize) -> Self {
        Self::new(
            coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect(),
            order,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat_normalize, UPolynomial, URational};

    fn q(n: i64, d: i64) -> ExactRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn product_of_one_plus_and_one_minus() {
        let a = PowerSeries::from_ints(&[1, 1], 2);
        let b = PowerSeries::from_ints(&[1, -1], 2);
        assert_eq!(a.product(&b), PowerSeries::from_ints(&[1, 0, -1], 2));
    }

    #[test]
    fn product_with_one_is_identity() {
        let a = PowerSeries::new(vec![q(3, 2), q(-1, 5), q(7, 1)], 2);
        assert_eq!(a.product(&PowerSeries::one(2)), a);
    }

    #[test]
    fn exp_prefix_squared() {
        let e = PowerSeries::new(vec![q(1, 1), q(1, 1), q(1, 2)], 2);
        assert_eq!(e.product(&e), PowerSeries::new(vec![q(1, 1), q(2, 1), q(2, 1)], 2));
    }

    #[test]
    fn product_truncates_to_min_order() {
        let a = PowerSeries::from_ints(&[1, 1, 1, 1], 3);
        let b = PowerSeries::from_ints(&[1, 1], 1);
        assert_eq!(a.product(&b).order(), 1);
    }

    #[test]
    fn reciprocal_geometric() {
        let a = PowerSeries::from_ints(&[1, 1], 3);
        assert_eq!(a.reciprocal().unwrap(), PowerSeries::from_ints(&[1, -1, 1, -1], 3));
    }

    #[test]
    fn reciprocal_rejects_zero_constant() {
        let a = PowerSeries::from_ints(&[0, 1], 3);
        assert_eq!(a.reciprocal().unwrap_err().to_string(), "series not invertible");
    }

    #[test]
    fn reciprocal_of_one_minus_u_exp_minus_t() {
        let u = URational::u();
        let series = PowerSeries::one(1).sub(&PowerSeries::exp_linear(&URational::from_int(-1), 1).scale(&u));
        let r = series.reciprocal().unwrap();
        let one_minus_u = UPolynomial::from_ints(&[1, -1]);
        assert_eq!(r.coeff(0), &rat_normalize(UPolynomial::one(), one_minus_u.clone()).unwrap());
        // -u / (1-u)^2
        let expected = rat_normalize(UPolynomial::from_ints(&[0, -1]), &one_minus_u * &one_minus_u).unwrap();
        assert_eq!(r.coeff(1), &expected);
    }

    #[test]
    fn exp_linear_values() {
        assert_eq!(PowerSeries::exp_linear(&q(0, 1), 3), PowerSeries::from_ints(&[1], 3));
        assert_eq!(
            PowerSeries::exp_linear(&q(1, 1), 3),
            PowerSeries::new(vec![q(1, 1), q(1, 1), q(1, 2), q(1, 6)], 3)
        );
        let x = UPolynomial::var();
        let e = PowerSeries::exp_linear(&x, 2);
        assert_eq!(e.coeff(2), &UPolynomial::monomial(q(1, 2), 2));
    }
}
