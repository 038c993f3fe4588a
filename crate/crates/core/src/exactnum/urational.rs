use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::upoly::forward_by_value;
use super::{Coefficient, ExactRational, UPolynomial};
use crate::error::{Error, Result};

/// Rational function in the parameter `u`, kept in canonical form:
/// numerator and denominator coprime over the rationals, denominator monic.
/// Zero is `0/1`.
///
/// Canonical form makes structural equality coincide with algebraic
/// equality, which is what every exact verdict in this crate relies on.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct URational {
    num: UPolynomial,
    den: UPolynomial,
}

/// Reduces `num/den` to canonical form.
pub fn rat_normalize(num: UPolynomial, den: UPolynomial) -> Result<URational> {
    if den.is_zero() {
        return Err(Error::DivisionByZeroPolynomial);
    }
    if num.is_zero() {
        return Ok(URational::zero());
    }
    let g = num.gcd(&den);
    let (num, den) = if g.is_one() {
        (num, den)
    } else {
        (num.div_exact(&g)?, den.div_exact(&g)?)
    };
    let lead_inv = den.leading().expect("nonzero denominator").recip();
    Ok(URational {
        num: num.scale(&lead_inv),
        den: den.scale(&lead_inv),
    })
}

impl URational {
    pub fn from_poly(p: UPolynomial) -> Self {
        URational {
            num: p,
            den: UPolynomial::one(),
        }
    }

    pub fn constant(c: ExactRational) -> Self {
        Self::from_poly(UPolynomial::constant(c))
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(ExactRational::from_integer(c.into()))
    }

    /// The parameter `u`.
    pub fn u() -> Self {
        Self::from_poly(UPolynomial::var())
    }

    pub fn numer(&self) -> &UPolynomial {
        &self.num
    }

    pub fn denom(&self) -> &UPolynomial {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn scale(&self, c: &ExactRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        URational {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZeroPolynomial);
        }
        rat_normalize(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    pub fn pow(&self, e: usize) -> Self {
        // Powers of coprime polynomials stay coprime.
        let lead = self.den.leading().cloned().unwrap_or_else(ExactRational::one);
        debug_assert!(lead.is_one());
        URational {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }

    /// Evaluates at a rational `u`.
    pub fn eval(&self, u: &ExactRational) -> Result<ExactRational> {
        let d = self.den.eval(u);
        if d.is_zero() {
            return Err(if u.is_one() {
                Error::PoleAtUOne
            } else {
                Error::Pole(super::render_rational(u))
            });
        }
        Ok(self.num.eval(u) / d)
    }
}

impl fmt::Display for URational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return f.write_str(&self.num.render_in("u"));
        }
        let num = self.num.render_in("u");
        if self.num.term_count() > 1 {
            write!(f, "({num})")?;
        } else {
            f.write_str(&num)?;
        }
        if self.den.term_count() > 1 {
            write!(f, "/({})", self.den.render_in("u"))
        } else {
            write!(f, "/{}", self.den.render_in("u"))
        }
    }
}

impl fmt::Debug for URational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "URational({self})")
    }
}

impl Add<&URational> for &URational {
    type Output = URational;
    fn add(self, rhs: &URational) -> URational {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return rat_normalize(&self.num + &rhs.num, self.den.clone()).expect("nonzero denominator");
        }
        let g = self.den.gcd(&rhs.den);
        let (a_cof, b_cof) = if g.is_one() {
            (self.den.clone(), rhs.den.clone())
        } else {
            (
                self.den.div_exact(&g).expect("gcd divides"),
                rhs.den.div_exact(&g).expect("gcd divides"),
            )
        };
        let num = &(&self.num * &b_cof) + &(&rhs.num * &a_cof);
        rat_normalize(num, &self.den * &b_cof).expect("nonzero denominator")
    }
}

impl Sub<&URational> for &URational {
    type Output = URational;
    fn sub(self, rhs: &URational) -> URational {
        self + &(-rhs)
    }
}

impl Mul<&URational> for &URational {
    type Output = URational;
    fn mul(self, rhs: &URational) -> URational {
        if self.is_zero() || rhs.is_zero() {
            return URational::zero();
        }
        if self.is_polynomial() && rhs.is_polynomial() {
            return URational::from_poly(&self.num * &rhs.num);
        }
        rat_normalize(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero denominator")
    }
}

impl Neg for &URational {
    type Output = URational;
    fn neg(self) -> URational {
        URational {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

forward_by_value!(URational, Add add, Sub sub, Mul mul);

impl Neg for URational {
    type Output = URational;
    fn neg(self) -> URational {
        -&self
    }
}

impl Zero for URational {
    fn zero() -> Self {
        Self::from_poly(UPolynomial::zero())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for URational {
    fn one() -> Self {
        Self::from_poly(UPolynomial::one())
    }
}

impl From<UPolynomial> for URational {
    fn from(p: UPolynomial) -> Self {
        Self::from_poly(p)
    }
}

impl Coefficient for URational {
    fn from_rational(r: ExactRational) -> Self {
        Self::constant(r)
    }

    fn try_inv(&self) -> Option<Self> {
        Self::one().checked_div(self).ok()
    }
}
