use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Integer partition stored with parts in weakly increasing order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntegerPartition {
    parts: Vec<u32>,
}

impl IntegerPartition {
    /// Parts may be given in any order; zero parts are rejected.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition("parts must be positive".into()));
        }
        parts.sort_unstable();
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn total(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    /// All partitions of `j`, each listed once.
    pub fn all_of(j: u32) -> Vec<Self> {
        fn go(rest: u32, min: u32, acc: &mut Vec<u32>, out: &mut Vec<IntegerPartition>) {
            if rest == 0 {
                out.push(IntegerPartition { parts: acc.clone() });
                return;
            }
            for part in min..=rest {
                acc.push(part);
                go(rest - part, part, acc, out);
                acc.pop();
            }
        }
        let mut out = Vec::new();
        go(j, 1, &mut Vec::new(), &mut out);
        out
    }
}

/// Number of partitions of `j`, with `a(0) = 1`.
pub fn partition_count(j: u32) -> BigUint {
    partition_counts(j as usize).pop().expect("nonempty")
}

fn partition_counts(upto: usize) -> Vec<BigUint> {
    let mut ways = vec![BigUint::zero(); upto + 1];
    ways[0] = BigUint::one();
    for part in 1..=upto {
        for s in part..=upto {
            let add = ways[s - part].clone();
            ways[s] += add;
        }
    }
    ways
}

/// Stable number of 0-convex words over `[1, p]`:
/// the sum over `m` of `(a(0) + ... + a(m - 1))^2`.
pub fn g0p_stable(p: u32) -> BigUint {
    let a = partition_counts(p as usize);
    let mut prefix = BigUint::zero();
    let mut total = BigUint::zero();
    for am in a.iter().take(p as usize) {
        prefix += am;
        total += &prefix * &prefix;
    }
    total
}
