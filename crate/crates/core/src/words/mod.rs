//! k-convex words `f: [n] -> [p]`.
//!
//! Counting is done three ways: backtracking, the two-letter-state recurrence,
//! and a linear system of generating functions indexed by the first two
//! letters. For `k = 0` the long-word count stabilizes, and [`bijection`]
//! realizes the correspondence with pairs of integer partitions behind it.

pub mod bijection;
pub mod partition;

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

pub use bijection::{decode_word, encode_word};
pub use partition::{g0p_stable, partition_count, IntegerPartition};

use crate::error::{Error, Result};
use crate::exact::{solve_linear_system, solve_series_system, Matrix};
use crate::{Poly, Rational, RationalFunction, Series};

/// A word over the alphabet `[1, alphabet]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<u32>,
    alphabet: u32,
}

impl Word {
    pub fn new(letters: Vec<u32>, alphabet: u32) -> Result<Self> {
        if let Some(&letter) = letters.iter().find(|&&l| l == 0 || l > alphabet) {
            return Err(Error::LetterOutOfRange { letter, alphabet });
        }
        Ok(Self { letters, alphabet })
    }

    /// Parse either a run of digits (`"23321"`) or a comma-separated list.
    pub fn parse(text: &str, alphabet: u32) -> Result<Self> {
        let text = text.trim();
        let letters: Option<Vec<u32>> = if text.contains(',') {
            text.split(',').map(|t| t.trim().parse::<u32>().ok()).collect()
        } else {
            text.chars().map(|c| c.to_digit(10)).collect()
        };
        let letters = letters.ok_or_else(|| Error::InvalidArgument(format!("bad word {text:?}")))?;
        Self::new(letters, alphabet)
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    pub fn alphabet(&self) -> u32 {
        self.alphabet
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.alphabet <= 9 { "" } else { "," };
        let parts: Vec<String> = self.letters.iter().map(u32::to_string).collect();
        write!(f, "{}", parts.join(sep))
    }
}

/// Second-difference test shared by words and permutations.
pub(crate) fn second_differences_ok(seq: &[u32], k: u32) -> bool {
    seq.windows(3)
        .all(|w| i64::from(w[0]) + i64::from(w[2]) - 2 * i64::from(w[1]) <= i64::from(k))
}

/// True when every interior second difference is at most `k`.
pub fn is_convex_word(w: &Word, k: u32) -> bool {
    second_differences_ok(&w.letters, k)
}

/// Count k-convex words of length `n` over `[1, p]` by depth-first search.
pub fn count_words_bruteforce(n: usize, p: u32, k: u32) -> u64 {
    fn extend(prefix: &mut Vec<i64>, n: usize, p: i64, k: i64) -> u64 {
        if prefix.len() == n {
            return 1;
        }
        let m = prefix.len();
        let mut total = 0;
        for next in 1..=p {
            if m >= 2 && prefix[m - 2] + next - 2 * prefix[m - 1] > k {
                continue;
            }
            prefix.push(next);
            total += extend(prefix, n, p, k);
            prefix.pop();
        }
        total
    }
    extend(&mut Vec::with_capacity(n), n, i64::from(p), i64::from(k))
}

/// Count k-convex words of length `n` over `[1, p]` with the recurrence on the
/// first two letters: `f_n(a, b) = sum of f_{n-1}(b, i)` over letters
/// `i <= k + 2b - a`.
pub fn count_words_dp(n: usize, p: u32, k: u32) -> BigUint {
    match n {
        0 => return BigUint::one(),
        1 => return BigUint::from(p),
        _ => {}
    }
    let ps = p as usize;
    let limit = |a: usize, b: usize| -> usize {
        // letters are 1-based; a and b here are 1-based too
        let top = i64::from(k) + 2 * b as i64 - a as i64;
        top.clamp(0, ps as i64) as usize
    };
    // counts[a-1][b-1] = f_len(a, b)
    let mut counts = vec![vec![BigUint::one(); ps]; ps];
    for _ in 3..=n {
        // prefix[b-1][t] = sum_{i <= t} f(b, i)
        let prefix: Vec<Vec<BigUint>> = counts
            .iter()
            .map(|row| {
                let mut acc = BigUint::zero();
                std::iter::once(BigUint::zero())
                    .chain(row.iter().map(|v| {
                        acc += v;
                        acc.clone()
                    }))
                    .collect()
            })
            .collect();
        counts = (1..=ps)
            .map(|a| (1..=ps).map(|b| prefix[b - 1][limit(a, b)].clone()).collect())
            .collect();
    }
    counts.iter().flatten().sum()
}

/// Generating function of k-convex words over `[1, p]`.
#[derive(Clone, Debug, PartialEq)]
pub struct WordGf {
    pub p: u32,
    pub k: u32,
    pub series: Series,
    pub ratfun: Option<RationalFunction>,
}

fn pair_index(a: usize, b: usize, p: usize) -> usize {
    (a - 1) * p + (b - 1)
}

/// Solve the `p^2` equations `F(a,b) - x * sum F(b,i) = x^2` for the
/// generating functions of words with prescribed first two letters, then
/// assemble `1 + p x + sum F(a,b)`.
///
/// The series solve is always done. With `exact` the same system is also
/// solved over rational functions, which is slower for large `p`.
pub fn word_gf(p: u32, k: u32, order: usize, exact: bool) -> Result<WordGf> {
    if p == 0 {
        return Err(Error::InvalidArgument("alphabet size must be positive".into()));
    }
    let ps = p as usize;
    let n = ps * ps;
    let targets = |a: usize, b: usize| -> std::ops::RangeInclusive<usize> {
        let top = (i64::from(k) + 2 * b as i64 - a as i64).min(ps as i64);
        1..=(top.max(0) as usize)
    };
    // coefficient of x in entry (row, col); diagonal adds 1
    let mut x_coeff = vec![vec![0i64; n]; n];
    for a in 1..=ps {
        for b in 1..=ps {
            let row = pair_index(a, b, ps);
            for i in targets(a, b) {
                x_coeff[row][pair_index(b, i, ps)] -= 1;
            }
        }
    }
    let int = |v: i64| Rational::from_integer(v.into());

    let series_matrix = Matrix::from_fn(n, n, |r, c| {
        Series::new(vec![int(i64::from(r == c)), int(x_coeff[r][c])], order)
    });
    let rhs = vec![Series::monomial(int(1), 2, order); n];
    let solution = solve_series_system(&series_matrix, &rhs)?;
    let mut series = Series::new(vec![int(1), int(i64::from(p))], order);
    for s in &solution {
        series = &series + s;
    }

    let ratfun = if exact {
        let m = Matrix::from_fn(n, n, |r, c| {
            RationalFunction::from_poly(Poly::new(vec![int(i64::from(r == c)), int(x_coeff[r][c])]))
        });
        let x2 = RationalFunction::from_poly(Poly::monomial(int(1), 2));
        let sol = solve_linear_system(&m, &vec![x2; n])?;
        let base = RationalFunction::from_poly(Poly::new(vec![int(1), int(i64::from(p))]));
        Some(sol.iter().fold(base, |acc, f| &acc + f))
    } else {
        None
    };

    Ok(WordGf { p, k, series, ratfun })
}
