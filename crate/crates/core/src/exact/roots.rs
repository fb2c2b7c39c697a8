use num_traits::Signed;

use super::{Polynomial, Scalar};
use crate::error::{Error, Result};

/// Closed interval `[lo, hi]` known to contain a root.
#[derive(Clone, Debug, PartialEq)]
pub struct RootInterval<T> {
    pub lo: T,
    pub hi: T,
}

impl<T: Scalar + PartialOrd> RootInterval<T> {
    pub fn width(&self) -> T {
        self.hi.clone() - self.lo.clone()
    }

    pub fn contains(&self, x: &T) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    /// Degenerate interval: the root was hit exactly.
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }
}

fn sign<T: Scalar + Signed>(v: &T) -> i8 {
    if v.is_zero() {
        0
    } else if v.is_positive() {
        1
    } else {
        -1
    }
}

fn sturm_chain<T: Scalar + Signed>(p: &Polynomial<T>) -> Vec<Polynomial<T>> {
    let mut chain = vec![p.clone(), p.derivative()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            break;
        }
        let (_, r) = chain[n - 2].div_rem(&chain[n - 1]).expect("nonzero divisor");
        if r.is_zero() {
            break;
        }
        chain.push(-r);
    }
    chain
}

fn variations<T: Scalar + Signed>(chain: &[Polynomial<T>], x: &T) -> usize {
    let signs: Vec<i8> = chain.iter().map(|q| sign(&q.eval(x))).filter(|&s| s != 0).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Number of distinct real roots of `p` in `(a, b]`, by Sturm's theorem.
pub fn sturm_count<T: Scalar + Signed + PartialOrd>(p: &Polynomial<T>, a: &T, b: &T) -> usize {
    if p.degree().unwrap_or(0) == 0 {
        return 0;
    }
    let sq = square_free(p);
    let chain = sturm_chain(&sq);
    variations(&chain, a).saturating_sub(variations(&chain, b))
}

fn square_free<T: Scalar>(p: &Polynomial<T>) -> Polynomial<T> {
    let g = p.gcd(&p.derivative());
    if g.degree().unwrap_or(0) == 0 {
        p.clone()
    } else {
        p.div_rem(&g).expect("gcd is nonzero").0
    }
}

const MAX_STEPS: usize = 20_000;

/// Isolate the smallest root of `p` in `(0, bound]` to an interval narrower
/// than `10^-precision`.
///
/// Sturm sequences of the square-free part locate the leftmost root, then
/// plain bisection refines it. The returned endpoints carry strictly opposite
/// signs of the square-free part, or coincide when a bisection point is an
/// exact root. With exact scalars the width bound always holds; with floats
/// refinement stops when the midpoint no longer moves.
pub fn smallest_positive_root<T>(p: &Polynomial<T>, precision: u32, bound: &T) -> Result<RootInterval<T>>
where
    T: Scalar + Signed + PartialOrd,
{
    if p.eval(&T::zero()).is_zero() {
        return Err(Error::ZeroAtOrigin);
    }
    let sq = square_free(p);
    let chain = sturm_chain(&sq);
    let count = |a: &T, b: &T| variations(&chain, a).saturating_sub(variations(&chain, b));
    let two = T::one() + T::one();
    let ten = two.clone() * (two.clone() + two.clone()) + two.clone();
    let eps = (0..precision).fold(T::one(), |acc, _| acc / ten.clone());

    let mut lo = T::zero();
    let mut hi = bound.clone();
    if count(&lo, &hi) == 0 {
        return Err(Error::NoRootInRange { bound: format!("{bound:?}") });
    }

    // Leftmost root lies in (lo, hi]; shrink until it is the only one.
    let mut steps = 0;
    while count(&lo, &hi) > 1 || sq.eval(&hi).is_zero() {
        if sq.eval(&hi).is_zero() && count(&lo, &hi) == 1 {
            return Ok(RootInterval { lo: hi.clone(), hi });
        }
        let mid = (lo.clone() + hi.clone()) / two.clone();
        if count(&lo, &mid) >= 1 {
            hi = mid;
        } else {
            lo = mid;
        }
        steps += 1;
        if steps > MAX_STEPS {
            break;
        }
    }

    let lo_sign = sign(&sq.eval(&lo));
    while hi.clone() - lo.clone() >= eps && steps <= MAX_STEPS {
        let mid = (lo.clone() + hi.clone()) / two.clone();
        if mid == lo || mid == hi {
            break;
        }
        match sign(&sq.eval(&mid)) {
            0 => return Ok(RootInterval { lo: mid.clone(), hi: mid }),
            s if s == lo_sign => lo = mid,
            _ => hi = mid,
        }
        steps += 1;
    }
    Ok(RootInterval { lo, hi })
}
