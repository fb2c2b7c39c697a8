//! k-convex permutations.
//!
//! For `k <= 2` every k-convex permutation is a mountain with the entry 1 at
//! one end, and removing that 1 leaves a k-convex permutation. Permutations
//! of length `n + 1` are therefore the L and R descendants of those of length
//! `n`, and whether a descendant exists depends only on the two entries at
//! each end. [`state`] turns this into a finite-state walk model, [`digraph`]
//! materializes it as a transition graph, and [`bounds`] truncates that graph
//! to get rational generating functions bracketing the growth rate.

pub mod bounds;
pub mod digraph;
pub mod state;

use std::fmt;

pub use bounds::{
    check_subadditivity, gf_bound, growth_bounds, perm_gf_from_walk_gf, BoundGf, GrowthBounds, Side,
    SubadditivityReport, SubadditivityViolation,
};
pub use digraph::{build_digraph, DescendantDigraph, Edge, Node, Truncation};
pub use state::{
    canonicalize_state, count_perms_digraph, lazy_walk_counts, restricted_walks, CanonicalState, Dir,
    EndpointState, WalkTally,
};

use crate::error::{Error, Result};
use crate::words::second_differences_ok;

/// A permutation of `[1, n]` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    entries: Vec<u32>,
}

impl Permutation {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        let n = entries.len();
        let mut seen = vec![false; n + 1];
        for &e in &entries {
            let i = e as usize;
            if i == 0 || i > n || seen[i] {
                return Err(Error::InvalidPermutation(format!("{entries:?} is not a permutation of [1, {n}]")));
            }
            seen[i] = true;
        }
        Ok(Self { entries })
    }

    /// Parse a run of digits (`"12453"`) or a comma-separated list.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        let entries: Option<Vec<u32>> = if text.contains(',') {
            text.split(',').map(|t| t.trim().parse().ok()).collect()
        } else {
            text.chars().map(|c| c.to_digit(10)).collect()
        };
        Self::new(entries.ok_or_else(|| Error::InvalidPermutation(format!("cannot parse {text:?}")))?)
    }

    pub fn identity(n: usize) -> Self {
        Self { entries: (1..=n as u32).collect() }
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn reversed(&self) -> Self {
        Self { entries: self.entries.iter().rev().copied().collect() }
    }

    /// All permutations of `[1, n]` in lexicographic order.
    pub fn all(n: usize) -> Vec<Self> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(n);
        let mut used = vec![false; n + 1];
        fn go(n: usize, current: &mut Vec<u32>, used: &mut [bool], out: &mut Vec<Permutation>) {
            if current.len() == n {
                out.push(Permutation { entries: current.clone() });
                return;
            }
            for v in 1..=n {
                if !used[v] {
                    used[v] = true;
                    current.push(v as u32);
                    go(n, current, used, out);
                    current.pop();
                    used[v] = false;
                }
            }
        }
        go(n, &mut current, &mut used, &mut out);
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.entries.len() <= 9 { "" } else { "," };
        let parts: Vec<String> = self.entries.iter().map(u32::to_string).collect();
        write!(f, "{}", parts.join(sep))
    }
}

pub fn is_convex_perm(p: &Permutation, k: u32) -> bool {
    second_differences_ok(&p.entries, k)
}

/// `p(i+1) <= p(i) + 1` everywhere.
pub fn is_slow_riser(p: &Permutation) -> bool {
    p.entries.windows(2).all(|w| w[1] <= w[0] + 1)
}

/// All k-convex permutations of length `n`, by backtracking.
pub fn convex_perms(n: usize, k: u32) -> Vec<Permutation> {
    let mut out = Vec::new();
    backtrack(n, k, &mut |p| out.push(Permutation { entries: p.to_vec() }));
    out
}

/// `f_k(n)`, by backtracking with pruning at each completed interior position.
pub fn count_perms_bruteforce(n: usize, k: u32) -> u64 {
    let mut count = 0;
    backtrack(n, k, &mut |_| count += 1);
    count
}

fn backtrack(n: usize, k: u32, visit: &mut dyn FnMut(&[u32])) {
    fn go(n: usize, k: i64, prefix: &mut Vec<u32>, used: &mut [bool], visit: &mut dyn FnMut(&[u32])) {
        let m = prefix.len();
        if m == n {
            visit(prefix);
            return;
        }
        for v in 1..=n as u32 {
            if used[v as usize] {
                continue;
            }
            if m >= 2 && i64::from(prefix[m - 2]) + i64::from(v) - 2 * i64::from(prefix[m - 1]) > k {
                continue;
            }
            used[v as usize] = true;
            prefix.push(v);
            go(n, k, prefix, used, visit);
            prefix.pop();
            used[v as usize] = false;
        }
    }
    go(n, i64::from(k), &mut Vec::with_capacity(n), &mut vec![false; n + 1], visit);
}

/// `f_0(n)`: 1, 2, 4, 6 for `n = 1..4`, then 8.
pub fn f0_closed(n: usize) -> u64 {
    match n {
        0 | 1 => 1,
        2 => 2,
        3 => 4,
        4 => 6,
        _ => 8,
    }
}

/// L prepends a new 1, R appends one; all old entries go up by one.
/// Returns `None` when the result is not k-convex.
pub fn descend(p: &Permutation, dir: Dir, k: u32) -> Option<Permutation> {
    let shifted = p.entries.iter().map(|&e| e + 1);
    let entries: Vec<u32> = match dir {
        Dir::L => std::iter::once(1).chain(shifted).collect(),
        Dir::R => shifted.chain(std::iter::once(1)).collect(),
    };
    let n = entries.len();
    let window = match dir {
        Dir::L => &entries[..n.min(3)],
        Dir::R => &entries[n.saturating_sub(3)..],
    };
    second_differences_ok(window, k).then_some(Permutation { entries })
}

/// Number of descendants in generations `1..=depth`, by explicit expansion.
pub fn descendant_counts(p: &Permutation, k: u32, depth: usize) -> Vec<u64> {
    let mut frontier = vec![p.clone()];
    let mut counts = Vec::with_capacity(depth);
    for _ in 0..depth {
        frontier = frontier
            .iter()
            .flat_map(|q| [Dir::L, Dir::R].into_iter().filter_map(move |d| descend(q, d, k)))
            .collect();
        counts.push(frontier.len() as u64);
    }
    counts
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Color {
    Red,
    Blue,
}

/// `colors[i]` colors the integer `i + 1`; the result has length `colors.len() + 1`.
/// Red integers ascend, then `n`, then blue integers descend.
pub fn mountain_from_coloring(colors: &[Color]) -> Permutation {
    let n = colors.len() as u32 + 1;
    let pick = |c: Color| (1..n).filter(move |&i| colors[i as usize - 1] == c);
    let mut entries: Vec<u32> = pick(Color::Red).collect();
    entries.push(n);
    entries.extend(pick(Color::Blue).collect::<Vec<_>>().into_iter().rev());
    Permutation { entries }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        Permutation::parse(s).unwrap()
    }

    #[test]
    fn convexity_examples() {
        assert!(is_convex_perm(&p("1342"), 0));
        assert!(!is_convex_perm(&p("213"), 2));
        assert!(is_convex_perm(&Permutation::identity(12), 0));
    }

    #[test]
    fn invalid_permutations_rejected() {
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!(Permutation::parse("13").is_err());
        assert_eq!(Permutation::parse("1,3,2").unwrap(), p("132"));
    }

    #[test]
    fn slow_risers() {
        assert!(is_slow_riser(&p("321")));
        assert!(!is_slow_riser(&p("132")));
        assert_eq!(Permutation::all(4).iter().filter(|q| is_slow_riser(q)).count(), 8);
    }

    #[test]
    fn bruteforce_table_values() {
        assert_eq!(count_perms_bruteforce(5, 1), 14);
        assert_eq!(count_perms_bruteforce(7, 0), 8);
        assert_eq!(count_perms_bruteforce(1, 0), 1);
    }

    #[test]
    fn f0_closed_values() {
        assert_eq!(f0_closed(3), 4);
        assert_eq!(f0_closed(4), 6);
        assert_eq!(f0_closed(100), 8);
    }

    #[test]
    fn descendants() {
        assert_eq!(descend(&p("12453"), Dir::L, 1), Some(p("123564")));
        assert_eq!(descend(&p("35421"), Dir::R, 1), Some(p("465321")));
        assert_eq!(descend(&Permutation::identity(6), Dir::L, 0), Some(Permutation::identity(7)));
        // L(1432) starts 1,2,5 with second difference 2
        assert_eq!(descend(&p("1432"), Dir::L, 1), None);
        assert_eq!(descend(&p("1432"), Dir::L, 2), Some(p("12543")));
    }

    #[test]
    fn coloring_examples() {
        use Color::{Blue as B, Red as R};
        assert_eq!(mountain_from_coloring(&[B, B, R, B, B, R, R, B]), p("367985421"));
        assert_eq!(mountain_from_coloring(&[R, R, R, B, R, R, B, B]), p("123569874"));
        assert_eq!(mountain_from_coloring(&[R; 5]), Permutation::identity(6));
    }
}
