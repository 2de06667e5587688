//! Exact arithmetic: rationals, univariate polynomials, Bernoulli numbers,
//! Faulhaber sums, truncated q-series and exact linear algebra.

mod bernoulli;
pub mod linalg;
mod poly;
mod qseries;
mod rational;

pub use bernoulli::{
    bernoulli_number, bernoulli_poly_at_half, faulhaber_poly, shifted_power_sum_poly,
};
pub use poly::UnivariatePoly;
pub use qseries::{partition_gf, QSeries};
pub use rational::{
    binomial, factorial, factorial_rat, parse_rational, rat, rat_int, to_f64, Rational,
};
