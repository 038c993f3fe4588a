//! Exact arithmetic: rationals, univariate polynomials in `u`, rational
//! functions in `u`, and truncated formal power series over any exact
//! coefficient domain.

mod coefficient;
mod rational;
mod series;
mod upoly;
mod urational;

pub use coefficient::Coefficient;
pub use rational::{binomial_row, factorial, parse_rational, rational_to_f64, render_rational, ExactRational};
pub use series::{series_exp_linear, series_product, series_reciprocal, PowerSeries};
pub use upoly::UPolynomial;
pub use urational::{rat_normalize, URational};
