//! Exact enumeration of locally convex words and permutations.
//!
//! A sequence `x` is *k-convex* when every interior second difference
//! `x[i-1] + x[i+1] - 2 x[i]` is at most `k`. This crate counts k-convex words
//! over a finite alphabet and k-convex permutations, builds their generating
//! functions with transfer matrices, and bounds the exponential growth of the
//! permutation counts with certified root intervals.
//!
//! The arithmetic kernel in [`exact`] is generic over the coefficient type;
//! everything combinatorial is instantiated at exact rationals through the
//! aliases below.

pub mod cfrac;
pub mod error;
pub mod exact;
pub mod perms;
pub mod words;

pub use error::{Error, Result};

/// Arbitrary-precision rational scalar used by every combinatorial routine.
pub type Rational = num_rational::BigRational;

/// Dense polynomial with exact rational coefficients.
pub type Poly = exact::Polynomial<Rational>;
/// Truncated power series with exact rational coefficients.
pub type Series = exact::TruncatedSeries<Rational>;
/// Matrix of exact truncated series.
pub type SeriesMatrix = exact::Matrix<Series>;
/// Matrix of exact polynomials.
pub type PolyMatrix = exact::Matrix<Poly>;
/// Root interval with exact rational endpoints.
pub type RootInterval = exact::RootInterval<Rational>;

/// Double-precision polynomial, handy for quick numerical exploration.
pub type PolyF64 = exact::Polynomial<f64>;
/// Double-precision truncated series.
pub type SeriesF64 = exact::TruncatedSeries<f64>;
/// Single-precision truncated series.
pub type SeriesF32 = exact::TruncatedSeries<f32>;

pub use exact::RationalFunction;

/// Default truncation order for series expansions.
pub const DEFAULT_ORDER: usize = 64;
