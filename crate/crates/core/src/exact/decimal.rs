use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rounding {
    /// Toward negative infinity.
    Down,
    /// Toward positive infinity.
    Up,
}

/// Fixed-point rendering of an exact rational with `digits` fractional digits.
pub fn to_decimal(x: &Rational, digits: usize, rounding: Rounding) -> String {
    let scale = num_traits::pow(BigInt::from(10), digits);
    let scaled = x * Rational::from_integer(scale.clone());
    let int = match rounding {
        Rounding::Down => scaled.floor().to_integer(),
        Rounding::Up => scaled.ceil().to_integer(),
    };
    let neg = int.is_negative();
    let (whole, frac) = int.abs().div_rem(&scale);
    let mut out = String::new();
    if neg && !(whole.is_zero() && frac.is_zero()) {
        out.push('-');
    }
    out.push_str(&whole.to_string());
    if digits > 0 {
        out.push('.');
        out.push_str(&format!("{:0>width$}", frac.to_string(), width = digits));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn rounding_directions() {
        assert_eq!(to_decimal(&r(2, 3), 4, Rounding::Down), "0.6666");
        assert_eq!(to_decimal(&r(2, 3), 4, Rounding::Up), "0.6667");
        assert_eq!(to_decimal(&r(-1, 3), 2, Rounding::Down), "-0.34");
        assert_eq!(to_decimal(&r(-1, 3), 2, Rounding::Up), "-0.33");
        assert_eq!(to_decimal(&r(1, 20), 3, Rounding::Down), "0.050");
        assert_eq!(to_decimal(&r(7, 1), 0, Rounding::Up), "7");
    }
}
