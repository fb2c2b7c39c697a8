//! Exact arithmetic kernel: polynomials, truncated power series, rational
//! functions, linear systems over these rings, and real root isolation.
//!
//! Polynomials, series and matrices are generic over a [`Scalar`]; the crate
//! root fixes them to [`BigRational`](num_rational::BigRational) for all
//! counting work. Rational functions are always exact.

mod decimal;
mod matrix;
mod poly;
mod ratfun;
mod roots;
mod scalar;
mod series;

pub use decimal::{to_decimal, Rounding};
pub use matrix::{matrix_resolvent_row, solve_linear_system, solve_series_system, EliminationRing, Matrix};
pub use poly::Polynomial;
pub use ratfun::RationalFunction;
pub use roots::{smallest_positive_root, sturm_count, RootInterval};
pub use scalar::Scalar;
pub use series::TruncatedSeries;
