//! Continued-fraction generating functions for walks above the root `1223`
//! of the 1-convex graph, and the generating functions of `f_1` and `f_2`
//! assembled from them.
//!
//! `H_k = 1 / (1 - q^(3+k) H_(k+1))` counts excursions from level `k` of the
//! tower of identity classes: one step up, excursions from the level above,
//! and a return path of length `2 + k`. `bot = H_1` counts walks returning to
//! the root, `tot` counts all walks.

use num_bigint::BigInt;

use crate::error::Result;
use crate::exact::solve_series_system;
use crate::perms::{lazy_walk_counts, restricted_walks, CanonicalState, Dir};
use crate::{Rational, Series, SeriesMatrix};

fn int(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

fn q(order: usize) -> Series {
    Series::var(order)
}

/// `H_1 .. H_depth` to order `N`, with `H_(depth+1)` replaced by 1.
#[derive(Clone, Debug, PartialEq)]
pub struct TowerSeries {
    pub depth: usize,
    pub order: usize,
    /// `levels[i]` is `H_(i+1)`.
    pub levels: Vec<Series>,
}

impl TowerSeries {
    /// Depth `N + 2`: every `H_i` used by [`tot_series`] is materialized, and
    /// the error from cutting at level `D` starts at degree `sum (3+j) > N`.
    pub fn new(order: usize) -> Self {
        Self::with_depth(order, order + 2)
    }

    pub fn with_depth(order: usize, depth: usize) -> Self {
        let depth = depth.max(1);
        let mut levels = vec![Series::one(order); depth];
        let mut above = Series::one(order);
        for k in (1..=depth).rev() {
            let denom = &Series::one(order) - &above.shift(3 + k);
            above = denom.inverse().expect("constant term is 1");
            levels[k - 1] = above.clone();
        }
        Self { depth, order, levels }
    }

    /// `H_k`, or 1 past the materialized depth.
    pub fn level(&self, k: usize) -> Series {
        self.levels.get(k - 1).cloned().unwrap_or_else(|| Series::one(self.order))
    }

    /// `H_k - 1 - q^(3+k) H_k H_(k+1)`, which vanishes to the stored order
    /// for every level except the truncated last one.
    pub fn residual(&self, k: usize) -> Series {
        let h = self.level(k);
        let next = self.level(k + 1);
        &(&h - &Series::one(self.order)) - &(&h * &next).shift(3 + k)
    }
}

/// Walks from the root returning to it, by length.
pub fn bot_series(order: usize) -> Series {
    TowerSeries::new(order).level(1)
}

/// All walks from the root, by length:
/// `H_1 + sum_{n >= 1} q^n (1 + q + ... + q^(n+1)) H_1 ... H_(n+1)`.
pub fn tot_series(order: usize) -> Series {
    let tower = TowerSeries::new(order);
    let mut total = tower.level(1);
    let mut product = tower.level(1);
    for n in 1..=order {
        product = &product * &tower.level(n + 1);
        let geometric = Series::new(vec![int(1); n + 2], order);
        total = &total + &(&product * &geometric).shift(n);
    }
    total
}

/// The sum with `(1 - q^(n+1)) / (1 - q)` in place of the factor above.
/// Kept to document that this form undercounts from degree 2 on.
pub fn tot_series_printed(order: usize) -> Series {
    let tower = TowerSeries::new(order);
    let mut total = Series::zero(order);
    let mut product = Series::one(order);
    for n in 0..=order {
        product = &product * &tower.level(n + 1);
        let geometric = Series::new(vec![int(1); n + 1], order);
        total = &total + &(&product * &geometric).shift(n);
    }
    total
}

/// `1 + q - 2q^2 (1 + bot q^2 + tot q) / (-1 + q + bot q^3)`.
pub fn f1_from(bot: &Series, tot: &Series) -> Series {
    let order = bot.order().min(tot.order());
    let one = Series::one(order);
    let num = &(&one + &bot.shift(2)) + &tot.shift(1);
    let den = &(&(-&one) + &q(order)) + &bot.shift(3);
    let frac = num.div(&den).expect("constant term is -1");
    &Series::from_integers([1, 1], order) - &frac.shift(2).scale(&int(2))
}

/// `f_1(n)` for `n = 0..=order`, with `f_1(0) = 1`.
pub fn f1_series(order: usize) -> Series {
    f1_from(&bot_series(order), &tot_series(order))
}

/// The 5x5 weighted transfer matrix with entries in `{0, 1, bot, tot - bot}`.
pub fn m1_matrix(order: usize) -> SeriesMatrix {
    let bot = bot_series(order);
    let tot = tot_series(order);
    let t_minus_b = &tot - &bot;
    let z = Series::zero(order);
    let o = Series::one(order);
    SeriesMatrix::from_rows(vec![
        vec![z.clone(), z.clone(), z.clone(), z.clone(), z.clone()],
        vec![o.clone(), o.clone(), z.clone(), z.clone(), o.clone()],
        vec![t_minus_b.clone(), t_minus_b, z.clone(), z.clone(), z.clone()],
        vec![bot.clone(), bot, z.clone(), z.clone(), z.clone()],
        vec![z.clone(), z.clone(), z.clone(), o, z],
    ])
    .expect("rows have equal length")
}

/// `1 + q + 2 q^2` times the first-column sum of `(I - q M_1)^(-1)`.
pub fn m1_series(order: usize) -> Result<Series> {
    let m = m1_matrix(order);
    let n = m.rows();
    let system = SeriesMatrix::from_fn(n, n, |i, j| {
        let id = if i == j { Series::one(order) } else { Series::zero(order) };
        &id - &m.get(i, j).shift(1)
    });
    let e0: Vec<Series> = (0..n)
        .map(|i| if i == 0 { Series::one(order) } else { Series::zero(order) })
        .collect();
    let column = solve_series_system(&system, &e0)?;
    let sum = column.iter().fold(Series::zero(order), |acc, s| &acc + s);
    Ok(&Series::from_integers([1, 1], order) + &sum.shift(2).scale(&int(2)))
}

/// Walk series of the 2-convex graph above `1245`.
#[derive(Clone, Debug, PartialEq)]
pub struct K2Components {
    /// All walks from `1245`.
    pub tot: Series,
    /// Walks ending at `1245`.
    pub bot1: Series,
    /// Walks ending at `1256`.
    pub bot2: Series,
}

/// Walks from the identity class of length 5 that never take the R edges
/// out of the identity classes of length 5 and 6 (those lead back below).
pub fn k2_components(order: usize) -> Result<K2Components> {
    let i5 = CanonicalState::identity(5);
    let i6 = CanonicalState::identity(6);
    let tally = restricted_walks(2, i5, &[(i5, Dir::R), (i6, Dir::R)], &[i5, i6], order)?;
    let to_series = |v: &[num_bigint::BigUint]| Series::from_integers(v.iter().cloned().map(BigInt::from), order);
    Ok(K2Components {
        tot: to_series(&tally.totals),
        bot1: to_series(&tally.ending[0]),
        bot2: to_series(&tally.ending[1]),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum F2Variant {
    /// As displayed: `q^4 (1 + bot2)` in the numerator.
    Printed,
    /// With `q^4 (bot1 + bot2)`, which is what the transfer matrix gives.
    Corrected,
}

/// `1 + q - 2q^2 (1 + q + q^2 + q^4 (X + bot2) + q^3 (1 + tot))
///  / (-1 + q + q^2 + q^4 - q^7 bot2 + q^5 (bot1 + bot2) - q^6 (bot1 + bot2))`
/// with `X = 1` for the printed variant and `X = bot1` for the corrected one.
pub fn f2_formula(c: &K2Components, variant: F2Variant) -> Series {
    let order = c.tot.order();
    let one = Series::one(order);
    let x = match variant {
        F2Variant::Printed => one.clone(),
        F2Variant::Corrected => c.bot1.clone(),
    };
    let b12 = &c.bot1 + &c.bot2;
    let num = [
        Series::from_integers([1, 1, 1], order),
        (&x + &c.bot2).shift(4),
        (&one + &c.tot).shift(3),
    ]
    .iter()
    .fold(Series::zero(order), |acc, s| &acc + s);
    let den = [
        Series::from_integers([-1, 1, 1, 0, 1], order),
        -&c.bot2.shift(7),
        b12.shift(5),
        -&b12.shift(6),
    ]
    .iter()
    .fold(Series::zero(order), |acc, s| &acc + s);
    let frac = num.div(&den).expect("constant term is -1");
    &Series::from_integers([1, 1], order) - &frac.shift(2).scale(&int(2))
}

/// Coefficientwise comparison of the k = 2 formula with exact counts.
#[derive(Clone, Debug, PartialEq)]
pub struct F2Report {
    pub order: usize,
    /// `f_2(n)` for `n = 0..=order` from the walk model, `f_2(0) = 1`.
    pub truth: Vec<BigInt>,
    pub printed: Vec<BigInt>,
    pub corrected: Vec<BigInt>,
    pub first_printed_mismatch: Option<usize>,
    pub first_corrected_mismatch: Option<usize>,
}

pub fn f2_formula_check(order: usize) -> Result<F2Report> {
    let walks = lazy_walk_counts(2, order.saturating_sub(2))?;
    let truth: Vec<BigInt> = (0..=order)
        .map(|n| if n < 2 { BigInt::from(1) } else { BigInt::from(&walks[n - 2] * 2u32) })
        .collect();
    let c = k2_components(order)?;
    let ints = |s: Series| s.to_integers().expect("integer coefficients");
    let printed = ints(f2_formula(&c, F2Variant::Printed));
    let corrected = ints(f2_formula(&c, F2Variant::Corrected));
    let first = |v: &[BigInt]| v.iter().zip(&truth).position(|(a, b)| a != b);
    Ok(F2Report {
        order,
        first_printed_mismatch: first(&printed),
        first_corrected_mismatch: first(&corrected),
        truth,
        printed,
        corrected,
    })
}
