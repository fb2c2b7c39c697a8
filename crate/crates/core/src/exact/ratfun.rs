use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::{Poly, Rational, Series};

/// Quotient of two polynomials, kept in canonical form.
///
/// Canonical means: numerator and denominator are coprime, both have integer
/// coefficients with no common integer content, and the denominator's leading
/// coefficient is positive. Two rational functions are equal exactly when
/// their canonical forms are identical, so `PartialEq` is structural.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

impl RationalFunction {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    pub fn from_poly(p: Poly) -> Self {
        Self::canonical(p, Poly::one())
    }

    /// Build from integer coefficient lists in ascending powers.
    pub fn from_integers(num: &[i64], den: &[i64]) -> Result<Self> {
        let conv = |c: &[i64]| Poly::new(c.iter().map(|&v| Rational::from_integer(v.into())).collect());
        Self::new(conv(num), conv(den))
    }

    pub fn zero() -> Self {
        Self { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        Self { num: Poly::one(), den: Poly::one() }
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn inverse(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inverse()?)
    }

    /// Taylor expansion at the origin through `x^order`.
    pub fn to_series(&self, order: usize) -> Result<Series> {
        let den = Series::from_polynomial(&self.den, order);
        let num = Series::from_polynomial(&self.num, order);
        Ok(&num * &den.inverse()?)
    }

    fn canonical(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let (mut num, _) = num.div_rem(&g).expect("gcd is nonzero");
        let (mut den, _) = den.div_rem(&g).expect("gcd is nonzero");

        let all = || num.coeffs().iter().chain(den.coeffs().iter());
        let lcm_den = all().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let scaled = |p: &Poly| -> Vec<BigInt> {
            p.coeffs()
                .iter()
                .map(|c| (c * Rational::from_integer(lcm_den.clone())).to_integer())
                .collect()
        };
        let mut ni = scaled(&num);
        let mut di = scaled(&den);
        let content = ni
            .iter()
            .chain(di.iter())
            .fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let negate = di.last().is_some_and(|c| c.is_negative());
        for c in ni.iter_mut().chain(di.iter_mut()) {
            *c = &*c / &content;
            if negate {
                *c = -&*c;
            }
        }
        let back = |v: Vec<BigInt>| Poly::new(v.into_iter().map(Rational::from_integer).collect());
        num = back(ni);
        den = back(di);
        Self { num, den }
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: Self) -> RationalFunction {
        if self.den == rhs.den {
            return RationalFunction::canonical(&self.num + &rhs.num, self.den.clone());
        }
        RationalFunction::canonical(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: Self) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: Self) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        RationalFunction::canonical(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == Poly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(n: &[i64], d: &[i64]) -> RationalFunction {
        RationalFunction::from_integers(n, d).unwrap()
    }

    #[test]
    fn shifted_geometric_expansion() {
        let s = rf(&[0, 0, 1], &[1, -1]).to_series(5).unwrap();
        let v: Vec<i64> = s.to_integers().unwrap().iter().map(|c| c.try_into().unwrap()).collect();
        assert_eq!(v, vec![0, 0, 1, 1, 1, 1]);
    }

    #[test]
    fn canonical_form_cancels_and_normalizes_sign() {
        // (x^2 - 1) / (2 - 2x) = -(x + 1) / 2
        let a = rf(&[-1, 0, 1], &[2, -2]);
        assert_eq!(a, rf(&[-1, -1], &[2]));
        assert_eq!(a.denominator().coeffs().last().unwrap(), &Rational::from_integer(2.into()));
        // sign conventions of printed formulas do not matter
        assert_eq!(rf(&[-1, -1], &[-1, 1]), rf(&[1, 1], &[1, -1]));
    }

    #[test]
    fn field_operations() {
        let a = rf(&[1], &[1, -1]);
        let b = rf(&[1], &[1, 1]);
        assert_eq!(&a + &b, rf(&[2], &[1, 0, -1]));
        assert_eq!(&(&a * &b) * &rf(&[1, 0, -1], &[1]), RationalFunction::one());
        assert_eq!(&a - &a, RationalFunction::zero());
        assert_eq!(a.checked_div(&a).unwrap(), RationalFunction::one());
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(RationalFunction::from_integers(&[1], &[0]), Err(Error::DivisionByZero));
        assert_eq!(RationalFunction::zero().inverse(), Err(Error::DivisionByZero));
    }

    #[test]
    fn denominator_vanishing_at_origin_has_no_expansion() {
        assert_eq!(rf(&[1], &[0, 1]).to_series(3), Err(Error::NonUnitConstantTerm));
    }
}
