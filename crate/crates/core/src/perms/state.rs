//! Endpoint states and the walk model on them.
//!
//! A permutation is abbreviated by `(a, b, c, d)`: its first two and last two
//! entries. L is possible iff `b - 2a <= k` and R iff `c - 2d <= k`. An R step
//! raises `a` and `b` by one, which lowers `b - 2a`, so once L is possible it
//! stays possible until taken, and taking it moves `b` into the interior.
//! The exact value of `b` is then irrelevant, and likewise for `c`. Canonical
//! states forget such values and pick the smaller of a state and its reversal.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::Permutation;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Dir {
    L,
    R,
}

impl fmt::Display for Dir {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Dir::L => "L",
            Dir::R => "R",
        })
    }
}

/// First, second, second-to-last and last entries.
///
/// Length 2 is stored as `(p1, p2, p1, p2)` and length 3 as `(p1, p2, p2, p3)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct EndpointState {
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub d: u32,
}

impl EndpointState {
    pub fn new(a: u32, b: u32, c: u32, d: u32) -> Result<Self> {
        if a == 0 || b == 0 || c == 0 || d == 0 || a == b || c == d {
            return Err(Error::UnrealizableState(format!("({a},{b},{c},{d})")));
        }
        Ok(Self { a, b, c, d })
    }

    pub fn of(p: &Permutation) -> Result<Self> {
        let e = p.entries();
        let n = e.len();
        match n {
            0 | 1 => Err(Error::InvalidPermutation("endpoint state needs length at least 2".into())),
            2 => Self::new(e[0], e[1], e[0], e[1]),
            _ => Self::new(e[0], e[1], e[n - 2], e[n - 1]),
        }
    }

    /// Compact abbreviation such as `1267`, with dots once an entry has two digits.
    pub fn label(&self) -> String {
        let parts = [self.a, self.b, self.c, self.d];
        let sep = if parts.iter().all(|&v| v < 10) { "" } else { "." };
        parts.map(|v| v.to_string()).join(sep)
    }
}

/// Class of identically-descending permutations. `None` marks an inner entry
/// whose value is irrelevant because that side can already descend.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalState {
    pub a: u32,
    pub b: Option<u32>,
    pub c: Option<u32>,
    pub d: u32,
}

impl CanonicalState {
    fn oriented(a: u32, b: Option<u32>, c: Option<u32>, d: u32, k: u32) -> Self {
        let slack = |inner: u32, outer: u32| i64::from(inner) - 2 * i64::from(outer) <= i64::from(k);
        Self {
            a,
            b: b.filter(|&b| !slack(b, a)),
            c: c.filter(|&c| !slack(c, d)),
            d,
        }
    }

    fn normalize(a: u32, b: Option<u32>, c: Option<u32>, d: u32, k: u32) -> Self {
        let s = Self::oriented(a, b, c, d, k);
        s.min(s.reversed())
    }

    pub fn reversed(&self) -> Self {
        Self { a: self.d, b: self.c, c: self.b, d: self.a }
    }

    /// The class of `12` (and of `132`, `1342`, ... for any `k`).
    pub fn seed() -> Self {
        Self::identity(2)
    }

    /// The class of the identity permutation of length `d`.
    pub fn identity(d: u32) -> Self {
        Self { a: 1, b: None, c: None, d }
    }

    pub fn is_identity_class(&self) -> bool {
        self.a == 1 && self.b.is_none() && self.c.is_none()
    }

    pub fn can_descend(&self, dir: Dir) -> bool {
        match dir {
            Dir::L => self.b.is_none(),
            Dir::R => self.c.is_none(),
        }
    }

    pub fn step(&self, dir: Dir, k: u32) -> Option<Self> {
        if !self.can_descend(dir) {
            return None;
        }
        let inc = |v: Option<u32>| v.map(|x| x + 1);
        Some(match dir {
            Dir::L => Self::normalize(1, Some(self.a + 1), inc(self.c), self.d + 1, k),
            Dir::R => Self::normalize(self.a + 1, inc(self.b), Some(self.d + 1), 1, k),
        })
    }

    /// Canonical state of a permutation together with the orientation
    /// (the permutation itself or its reversal) that matches it.
    pub fn of_permutation(p: &Permutation, k: u32) -> Result<(Self, Permutation)> {
        let s = EndpointState::of(p)?;
        let fwd = Self::oriented(s.a, Some(s.b), Some(s.c), s.d, k);
        let back = fwd.reversed();
        Ok(if back < fwd { (back, p.reversed()) } else { (fwd, p.clone()) })
    }
}

impl fmt::Display for CanonicalState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |v: Option<u32>| v.map_or_else(|| "*".to_string(), |x| x.to_string());
        write!(f, "({},{},{},{})", self.a, show(self.b), show(self.c), self.d)
    }
}

/// Canonical representative of the identically-descending class of `s`.
pub fn canonicalize_state(s: &EndpointState, k: u32) -> CanonicalState {
    CanonicalState::normalize(s.a, Some(s.b), Some(s.c), s.d, k)
}

pub(crate) fn check_k(k: u32) -> Result<()> {
    if k > 2 {
        return Err(Error::UnsupportedK { k, supported: "0, 1 or 2" });
    }
    Ok(())
}

/// Walk counts from one state by length, plus the counts of walks ending at
/// chosen target states.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalkTally {
    pub totals: Vec<BigUint>,
    /// `ending[t][n]` counts walks of length `n` ending at `targets[t]`.
    pub ending: Vec<Vec<BigUint>>,
}

/// Count walks of length `0..=max_len` from `start` on the infinite state
/// graph, never taking a forbidden `(state, dir)` edge.
pub fn restricted_walks(
    k: u32,
    start: CanonicalState,
    forbidden: &[(CanonicalState, Dir)],
    targets: &[CanonicalState],
    max_len: usize,
) -> Result<WalkTally> {
    check_k(k)?;
    let mut frontier: HashMap<CanonicalState, BigUint> = HashMap::from([(start, BigUint::one())]);
    let mut totals = Vec::with_capacity(max_len + 1);
    let mut ending = vec![Vec::with_capacity(max_len + 1); targets.len()];
    for len in 0..=max_len {
        totals.push(frontier.values().sum());
        for (t, row) in targets.iter().zip(ending.iter_mut()) {
            row.push(frontier.get(t).cloned().unwrap_or_else(BigUint::zero));
        }
        if len == max_len {
            break;
        }
        let mut next: HashMap<CanonicalState, BigUint> = HashMap::new();
        for (s, count) in &frontier {
            for dir in [Dir::L, Dir::R] {
                if forbidden.contains(&(*s, dir)) {
                    continue;
                }
                if let Some(t) = s.step(dir, k) {
                    *next.entry(t).or_insert_with(BigUint::zero) += count;
                }
            }
        }
        frontier = next;
    }
    Ok(WalkTally { totals, ending })
}

/// Walks of each length `0..=max_len` from the class of `12`; the walks of
/// length `n - 2` are half of the k-convex permutations of length `n`.
pub fn lazy_walk_counts(k: u32, max_len: usize) -> Result<Vec<BigUint>> {
    Ok(restricted_walks(k, CanonicalState::seed(), &[], &[], max_len)?.totals)
}

/// `f_k(n)` from the walk model, for `k <= 2`.
pub fn count_perms_digraph(n: usize, k: u32) -> Result<BigUint> {
    check_k(k)?;
    if n < 2 {
        return Ok(BigUint::one());
    }
    let walks = lazy_walk_counts(k, n - 2)?;
    Ok(walks[n - 2].clone() * 2u32)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perms::{count_perms_bruteforce, descend};

    fn p(s: &str) -> Permutation {
        Permutation::parse(s).unwrap()
    }

    #[test]
    fn endpoint_examples() {
        let st = |s: &str| {
            let e = EndpointState::of(&p(s)).unwrap();
            (e.a, e.b, e.c, e.d)
        };
        assert_eq!(st("123564"), (1, 2, 6, 4));
        assert_eq!(st("12453"), (1, 2, 5, 3));
        assert_eq!(st("1432"), (1, 4, 3, 2));
        assert_eq!(st("123"), (1, 2, 2, 3));
        assert_eq!(EndpointState::of(&p("123")).unwrap().label(), "1223");
    }

    #[test]
    fn canonical_examples() {
        let s = |a, b, c, d| EndpointState::new(a, b, c, d).unwrap();
        assert_eq!(canonicalize_state(&s(1, 2, 6, 4), 2), canonicalize_state(&s(1, 2, 3, 4), 2));
        assert_eq!(canonicalize_state(&s(1, 2, 2, 3), 1), CanonicalState::identity(3));
        // neither side can descend and the state is already the smaller orientation
        let stuck = canonicalize_state(&s(1, 4, 6, 2), 1);
        assert_eq!(stuck, CanonicalState { a: 1, b: Some(4), c: Some(6), d: 2 });
        assert!(!stuck.can_descend(Dir::L) && !stuck.can_descend(Dir::R));
        assert!(EndpointState::new(1, 1, 2, 3).is_err());
    }

    #[test]
    fn transitions_follow_permutations() {
        for k in 0..=2 {
            for n in 2..=7 {
                for q in crate::perms::convex_perms(n, k) {
                    let (s, oriented) = CanonicalState::of_permutation(&q, k).unwrap();
                    for dir in [Dir::L, Dir::R] {
                        let child = descend(&oriented, dir, k);
                        let stepped = s.step(dir, k);
                        assert_eq!(child.is_some(), stepped.is_some(), "{q} {dir} k={k}");
                        if let (Some(c), Some(t)) = (child, stepped) {
                            assert_eq!(CanonicalState::of_permutation(&c, k).unwrap().0, t);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn walk_model_counts() {
        assert_eq!(lazy_walk_counts(1, 8).unwrap()[8], BigUint::from(85u32));
        assert_eq!(lazy_walk_counts(2, 10).unwrap()[10], BigUint::from(544u32));
        for k in 0..=2 {
            for n in 1..=9 {
                assert_eq!(count_perms_digraph(n, k).unwrap(), BigUint::from(count_perms_bruteforce(n, k)));
            }
        }
        assert!(count_perms_digraph(5, 3).is_err());
    }
}
