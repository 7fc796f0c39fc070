//! Exact arithmetic kernel.
//!
//! - [`Rational`]: always-reduced arbitrary-precision fractions.
//! - [`Cyclotomic`]: elements of Q(ζ_n) in the power basis modulo Φ_n.
//! - [`LaurentSeries`]: truncated series in a nome with a fractional offset.
//! - [`ExactMatrix`]: small dense matrices over cyclotomic fields.
//! - [`MultiPoly`]: sparse multivariate polynomials.
//! - [`ntheory`]: totients, divisors, Hall divisors and friends.
//!
//! No floating point is used anywhere in this module.

pub mod cyclotomic;
pub mod matrix;
pub mod ntheory;
pub mod poly;
pub mod rational;
pub mod series;

pub use cyclotomic::Cyclotomic;
pub use matrix::ExactMatrix;
pub use ntheory::{euler_totient, hall_divisors, unit_square_moduli};
pub use poly::MultiPoly;
pub use rational::Rational;
pub use series::{series_root, LaurentSeries};
