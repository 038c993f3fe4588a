use std::fmt::Debug;
use std::ops::{Neg, Sub};

use num_traits::{One, Zero};

use super::ExactRational;

/// An exact coefficient domain for [`PowerSeries`](super::PowerSeries).
///
/// Ring operations come from the `num_traits`/`std::ops` supertraits; the
/// only extra requirements are an embedding of the rationals and a partial
/// inverse used by `reciprocal`.
pub trait Coefficient:
    Clone + PartialEq + Debug + Zero + One + Neg<Output = Self> + Sub<Output = Self>
{
    fn from_rational(r: ExactRational) -> Self;

    /// Multiplicative inverse, or `None` when the element is not a unit.
    fn try_inv(&self) -> Option<Self>;
}

impl Coefficient for ExactRational {
    fn from_rational(r: ExactRational) -> Self {
        r
    }

    fn try_inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}
