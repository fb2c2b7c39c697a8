//! Long 0-convex words with maximum `m` correspond to pairs of partitions of
//! numbers below `m`: the rising prefix and the falling suffix each record
//! their step sizes as a partition.

use super::partition::IntegerPartition;
use super::{is_convex_word, Word};
use crate::error::{Error, Result};

fn check_length(n: usize, p: u32) -> Result<()> {
    let needed = (2 * p as usize).saturating_sub(1);
    if n < needed {
        return Err(Error::LengthTooShort { length: n, needed });
    }
    Ok(())
}

/// Build the word `pf (m ... m) sf` of length `n` over `[1, p]`.
///
/// With `w1 = {a_1 <= ... <= a_L}`, `pf(i) = m - (a_1 + ... + a_{L-i+1})`, so
/// the steps of the prefix shrink towards the plateau. With `w2` increasing,
/// `sf(i) = m - (b_1 + ... + b_i)`.
pub fn encode_word(p: u32, m: u32, w1: &IntegerPartition, w2: &IntegerPartition, n: usize) -> Result<Word> {
    if m == 0 || m > p {
        return Err(Error::InvalidArgument(format!("maximum {m} outside [1, {p}]")));
    }
    for (name, w) in [("w1", w1), ("w2", w2)] {
        if w.total() >= u64::from(m) {
            return Err(Error::InvalidPartition(format!("{name} has total {} >= m = {m}", w.total())));
        }
    }
    check_length(n, p)?;
    let fixed = w1.len() + w2.len();
    if n <= fixed {
        return Err(Error::LengthTooShort { length: n, needed: fixed + 1 });
    }

    let parts1 = w1.parts();
    let mut letters: Vec<u32> = (1..=parts1.len())
        .map(|i| m - parts1[..parts1.len() - i + 1].iter().sum::<u32>())
        .collect();
    letters.extend(std::iter::repeat_n(m, n - fixed));
    let mut drop = 0;
    for &b in w2.parts() {
        drop += b;
        letters.push(m - drop);
    }
    Word::new(letters, p)
}

/// Recover `(m, w1, w2)` from a 0-convex word of length at least `2p - 1`.
pub fn decode_word(w: &Word) -> Result<(u32, IntegerPartition, IntegerPartition)> {
    if !is_convex_word(w, 0) {
        return Err(Error::NotConvex);
    }
    check_length(w.len(), w.alphabet())?;
    let letters = w.letters();
    let m = *letters.iter().max().ok_or(Error::LengthTooShort { length: 0, needed: 1 })?;
    let first = letters.iter().position(|&l| l == m).expect("maximum is attained");
    let last = letters.iter().rposition(|&l| l == m).expect("maximum is attained");
    if letters[first..=last].iter().any(|&l| l != m) {
        return Err(Error::InvalidArgument("maximum is not attained on a contiguous plateau".into()));
    }

    // steps up to the plateau, listed from the start
    let rise: Vec<u32> = letters[..=first].windows(2).map(|s| s[1] - s[0]).collect();
    let fall: Vec<u32> = letters[last..].windows(2).map(|s| s[0] - s[1]).collect();
    let non_increasing = |v: &[u32]| v.windows(2).all(|s| s[0] >= s[1]);
    let non_decreasing = |v: &[u32]| v.windows(2).all(|s| s[0] <= s[1]);
    if !non_increasing(&rise) || !non_decreasing(&fall) {
        return Err(Error::NotConvex);
    }
    // the last rise step is the gap m - pf(last), so every step is a part
    let w1 = IntegerPartition::new(rise)?;
    let w2 = IntegerPartition::new(fall)?;
    Ok((m, w1, w2))
}
