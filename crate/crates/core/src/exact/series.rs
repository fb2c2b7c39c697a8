use std::ops::{Add, Mul, Neg, Sub};

use super::{Polynomial, Scalar};
use crate::error::{Error, Result};

/// Power series known modulo `x^(order + 1)`.
///
/// Exactly `order + 1` coefficients are stored. Binary operations between
/// series of different orders re-truncate to the smaller order.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries<T: Scalar> {
    order: usize,
    coeffs: Vec<T>,
}

impl<T: Scalar> TruncatedSeries<T> {
    /// Pads with zeros or drops coefficients past `order`.
    pub fn new(mut coeffs: Vec<T>, order: usize) -> Self {
        coeffs.resize(order + 1, T::zero());
        Self { order, coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::constant(T::one(), order)
    }

    pub fn constant(c: T, order: usize) -> Self {
        Self::new(vec![c], order)
    }

    /// `c * x^degree`, which is zero when `degree > order`.
    pub fn monomial(c: T, degree: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if degree <= order {
            s.coeffs[degree] = c;
        }
        s
    }

    /// The indeterminate.
    pub fn var(order: usize) -> Self {
        Self::monomial(T::one(), 1, order)
    }

    pub fn from_polynomial(p: &Polynomial<T>, order: usize) -> Self {
        Self::new(p.coeffs().iter().take(order + 1).cloned().collect(), order)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn constant_term(&self) -> &T {
        &self.coeffs[0]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Reduce to a smaller order. Asking for a larger order keeps the current one,
    /// since unknown coefficients cannot be invented.
    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order);
        Self::new(self.coeffs[..=order].to_vec(), order)
    }

    pub fn scale(&self, c: &T) -> Self {
        Self {
            order: self.order,
            coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }

    /// Multiply by `x^k`, dropping what falls past the order.
    pub fn shift(&self, k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k.min(self.order + 1)];
        coeffs.extend(self.coeffs.iter().take((self.order + 1).saturating_sub(k)).cloned());
        Self::new(coeffs, self.order)
    }

    /// Multiplicative inverse, defined when the constant term is nonzero.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = self.coeffs[0].clone();
        if c0.is_zero() {
            return Err(Error::NonUnitConstantTerm);
        }
        let inv0 = T::one() / c0;
        let mut out: Vec<T> = Vec::with_capacity(self.order + 1);
        out.push(inv0.clone());
        for n in 1..=self.order {
            let mut acc = T::zero();
            for i in 1..=n {
                let a = &self.coeffs[i];
                if !a.is_zero() {
                    acc = acc + a.clone() * out[n - i].clone();
                }
            }
            out.push(-(acc * inv0.clone()));
        }
        Ok(Self { order: self.order, coeffs: out })
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inverse()?)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.order);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

fn common_order<T: Scalar>(a: &TruncatedSeries<T>, b: &TruncatedSeries<T>) -> usize {
    a.order.min(b.order)
}

impl<T: Scalar> Add for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;
    fn add(self, rhs: Self) -> TruncatedSeries<T> {
        let n = common_order(self, rhs);
        let coeffs = (0..=n).map(|i| self.coeffs[i].clone() + rhs.coeffs[i].clone()).collect();
        TruncatedSeries { order: n, coeffs }
    }
}

impl<T: Scalar> Sub for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;
    fn sub(self, rhs: Self) -> TruncatedSeries<T> {
        let n = common_order(self, rhs);
        let coeffs = (0..=n).map(|i| self.coeffs[i].clone() - rhs.coeffs[i].clone()).collect();
        TruncatedSeries { order: n, coeffs }
    }
}

impl<T: Scalar> Mul for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;
    fn mul(self, rhs: Self) -> TruncatedSeries<T> {
        let n = common_order(self, rhs);
        let mut coeffs = vec![T::zero(); n + 1];
        for (i, a) in self.coeffs.iter().take(n + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(n + 1 - i).enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
                }
            }
        }
        TruncatedSeries { order: n, coeffs }
    }
}

impl<T: Scalar> Neg for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;
    fn neg(self) -> TruncatedSeries<T> {
        TruncatedSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<T: Scalar> $tr for TruncatedSeries<T> {
            type Output = TruncatedSeries<T>;
            fn $m(self, rhs: Self) -> TruncatedSeries<T> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<T: Scalar> Neg for TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;
    fn neg(self) -> TruncatedSeries<T> {
        -&self
    }
}

impl crate::Series {
    /// Coefficients as integers, or `None` if any coefficient has a nontrivial denominator.
    pub fn to_integers(&self) -> Option<Vec<num_bigint::BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    /// Series with the given integer coefficients.
    pub fn from_integers<I, V>(values: I, order: usize) -> Self
    where
        I: IntoIterator<Item = V>,
        V: Into<num_bigint::BigInt>,
    {
        Self::new(
            values
                .into_iter()
                .map(|v| crate::Rational::from_integer(v.into()))
                .collect(),
            order,
        )
    }
}
