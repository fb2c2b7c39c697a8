use std::fmt::Debug;
use std::ops::Neg;

use num_traits::Num;

/// Coefficient type for polynomials, series and matrices.
///
/// Division is assumed to be field division. That holds exactly for
/// `BigRational` and approximately for the float types.
pub trait Scalar: Clone + Debug + PartialEq + Num + Neg<Output = Self> {}

impl<T> Scalar for T where T: Clone + Debug + PartialEq + Num + Neg<Output = T> {}
