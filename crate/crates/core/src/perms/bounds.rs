use num_bigint::BigUint;

use super::digraph::{build_digraph, Truncation};
use super::state::lazy_walk_counts;
use crate::error::{Error, Result};
use crate::exact::{smallest_positive_root, to_decimal, Rounding};
use crate::{Poly, Rational, RationalFunction, RootInterval};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Lower,
    Upper,
}

/// Generating functions of a truncated transition graph.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundGf {
    pub k: u32,
    pub side: Side,
    pub level: u32,
    pub nodes: usize,
    /// Walks from `12` by length; coefficient `n` is `f(n + 2) / 2` below the cutoff.
    pub walk_gf: RationalFunction,
    /// `1 + x + 2 x^2 walk_gf`, indexed by permutation length.
    pub perm_gf: RationalFunction,
}

pub fn perm_gf_from_walk_gf(walk_gf: &RationalFunction) -> RationalFunction {
    let int = |v: i64| Rational::from_integer(v.into());
    let boundary = RationalFunction::from_poly(Poly::new(vec![int(1), int(1)]));
    let two_x2 = RationalFunction::from_poly(Poly::monomial(int(2), 2));
    &boundary + &(&two_x2 * walk_gf)
}

/// Lower side cuts the graph; upper side cuts it and adds the loop.
pub fn gf_bound(k: u32, side: Side, level: Option<u32>) -> Result<BoundGf> {
    let level = match level {
        Some(l) => l,
        None => Truncation::default_level(k)?,
    };
    if k == 0 {
        return Err(Error::UnsupportedK { k, supported: "1 or 2" });
    }
    let truncation = match side {
        Side::Lower => Truncation::Cut { level },
        Side::Upper => Truncation::Loop { level },
    };
    let g = build_digraph(k, None, truncation)?;
    let walk_gf = g.walk_gf()?;
    let perm_gf = perm_gf_from_walk_gf(&walk_gf);
    Ok(BoundGf { k, side, level, nodes: g.len(), walk_gf, perm_gf })
}

/// Both truncations with their dominant singularities.
#[derive(Clone, Debug, PartialEq)]
pub struct GrowthBounds {
    pub k: u32,
    pub lower: BoundGf,
    pub upper: BoundGf,
    /// Smallest positive root of the lower generating function's denominator.
    pub lower_root: RootInterval,
    pub upper_root: RootInterval,
    /// `1 / lower_root`, rounded down.
    pub lower_rate: String,
    /// `1 / upper_root`, rounded up.
    pub upper_rate: String,
}

/// `[1 / hi, 1 / lo]` for a root interval inside `(0, 1)`.
pub fn reciprocal_interval(root: &RootInterval) -> (Rational, Rational) {
    (root.hi.recip(), root.lo.recip())
}

/// Roots are isolated to `10^-(precision + 2)` so the printed digits are safe.
pub fn growth_bounds(k: u32, precision: u32) -> Result<GrowthBounds> {
    let lower = gf_bound(k, Side::Lower, None)?;
    let upper = gf_bound(k, Side::Upper, None)?;
    let one = Rational::from_integer(1.into());
    let lower_root = smallest_positive_root(lower.walk_gf.denominator(), precision + 2, &one)?;
    let upper_root = smallest_positive_root(upper.walk_gf.denominator(), precision + 2, &one)?;
    let lower_rate = to_decimal(&reciprocal_interval(&lower_root).0, precision as usize, Rounding::Down);
    let upper_rate = to_decimal(&reciprocal_interval(&upper_root).1, precision as usize, Rounding::Up);
    Ok(GrowthBounds { k, lower, upper, lower_root, upper_root, lower_rate, upper_rate })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubadditivityViolation {
    pub m: usize,
    pub n: usize,
    pub f_sum: BigUint,
    pub product: BigUint,
}

/// Outcome of testing `f(m + n) <= f(m) f(n)` over all `m, n >= 1` with `m + n <= max_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubadditivityReport {
    pub k: u32,
    pub max_n: usize,
    pub checked: usize,
    pub violations: Vec<SubadditivityViolation>,
}

pub fn check_subadditivity(k: u32, max_n: usize) -> Result<SubadditivityReport> {
    let walks = lazy_walk_counts(k, max_n.saturating_sub(2))?;
    let f = |n: usize| -> BigUint {
        if n < 2 {
            BigUint::from(1u32)
        } else {
            &walks[n - 2] * 2u32
        }
    };
    let mut checked = 0;
    let mut violations = Vec::new();
    for m in 1..max_n {
        for n in m..=max_n - m {
            checked += 1;
            let f_sum = f(m + n);
            let product = f(m) * f(n);
            if f_sum > product {
                violations.push(SubadditivityViolation { m, n, f_sum, product });
            }
        }
    }
    Ok(SubadditivityReport { k, max_n, checked, violations })
}
