use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::state::{check_k, CanonicalState, Dir, EndpointState};
use super::{descend, Permutation};
use crate::error::{Error, Result};
use crate::exact::{matrix_resolvent_row, Matrix};
use crate::{Poly, Rational, RationalFunction};

const MAX_NODES: usize = 200_000;

/// How the infinite transition graph is made finite.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Truncation {
    /// Keep everything reachable (combine with a depth limit).
    None,
    /// Drop the L edge from the identity class of length `level` to `level + 1`.
    Cut { level: u32 },
    /// As `Cut`, plus a self-loop at the last node of the R-return path
    /// leaving the cut node.
    Loop { level: u32 },
}

impl Truncation {
    /// The cutoff used for the reference bounds: `1267` for `k = 1`, `1278` for `k = 2`.
    pub fn default_level(k: u32) -> Result<u32> {
        match k {
            1 => Ok(7),
            2 => Ok(8),
            _ => Err(Error::UnsupportedK { k, supported: "1 or 2" }),
        }
    }

    fn level(&self) -> Option<u32> {
        match *self {
            Truncation::None => None,
            Truncation::Cut { level } | Truncation::Loop { level } => Some(level),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Node {
    pub state: CanonicalState,
    /// Endpoints of the first permutation reaching this node, e.g. `1267`.
    pub label: String,
    pub representative: Permutation,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub dir: Dir,
    /// Added by truncation rather than by a descent.
    pub edited: bool,
}

/// L/R transition graph between identically-descending classes.
///
/// Node 0 is the permutation `12`. It gets its own node even though `132`
/// has the same canonical state, so that row 0 counts walks from `12` only.
#[derive(Clone, Debug, PartialEq)]
pub struct DescendantDigraph {
    pub k: u32,
    pub nodes: Vec<Node>,
    pub edges: Vec<Edge>,
    pub start: usize,
    pub truncation: Truncation,
    /// `(from, label of the dropped target)` for cut edges.
    pub removed: Option<(usize, String)>,
}

fn label_of(p: &Permutation) -> String {
    let e = p.entries();
    if e.len() == 2 {
        return p.to_string();
    }
    EndpointState::of(p).map(|s| s.label()).unwrap_or_default()
}

/// Breadth-first construction from `12`, L before R.
///
/// `depth` limits the number of generations expanded; it is required when
/// `truncation` is `None`, since the full graph is infinite.
pub fn build_digraph(k: u32, depth: Option<usize>, truncation: Truncation) -> Result<DescendantDigraph> {
    check_k(k)?;
    if truncation == Truncation::None && depth.is_none() {
        return Err(Error::InvalidArgument("an untruncated digraph needs a depth limit".into()));
    }
    let cut_state = match truncation.level() {
        Some(level) if level < 3 => {
            return Err(Error::InvalidArgument(format!("cutoff level {level} must be at least 3")))
        }
        Some(level) => Some(CanonicalState::identity(level)),
        None => None,
    };

    let seed = Node {
        state: CanonicalState::seed(),
        label: "12".into(),
        representative: Permutation::identity(2),
    };
    let mut nodes = vec![seed];
    let mut generation = vec![0usize];
    let mut index: HashMap<CanonicalState, usize> = HashMap::new();
    let mut edges = Vec::new();
    let mut removed = None;
    let mut queue = VecDeque::from([0usize]);

    while let Some(i) = queue.pop_front() {
        if depth.is_some_and(|d| generation[i] >= d) {
            continue;
        }
        let state = nodes[i].state;
        for dir in [Dir::L, Dir::R] {
            let Some(target) = state.step(dir, k) else { continue };
            let child = descend(&nodes[i].representative, dir, k).ok_or_else(|| {
                Error::Digraph(format!("state {state} allows {dir} but its representative does not"))
            })?;
            if i != 0 && Some(state) == cut_state && dir == Dir::L {
                removed = Some((i, label_of(&child)));
                continue;
            }
            let j = match index.get(&target) {
                Some(&j) => j,
                None => {
                    let (oriented_state, rep) = CanonicalState::of_permutation(&child, k)?;
                    if oriented_state != target {
                        return Err(Error::Digraph(format!("{child} does not realize {target}")));
                    }
                    nodes.push(Node { state: target, label: label_of(&rep), representative: rep });
                    generation.push(generation[i] + 1);
                    let j = nodes.len() - 1;
                    index.insert(target, j);
                    queue.push_back(j);
                    if nodes.len() > MAX_NODES {
                        return Err(Error::Digraph(format!("more than {MAX_NODES} nodes")));
                    }
                    j
                }
            };
            edges.push(Edge { from: i, to: j, dir, edited: false });
        }
    }

    let mut g = DescendantDigraph { k, nodes, edges, start: 0, truncation, removed };
    if let (Truncation::Loop { .. }, Some(cut)) = (truncation, cut_state) {
        let from = *index
            .get(&cut)
            .ok_or_else(|| Error::Digraph(format!("cutoff node {cut} not reached")))?;
        let end = g.return_path_end(from)?;
        g.edges.push(Edge { from: end, to: end, dir: Dir::R, edited: true });
    }
    Ok(g)
}

impl DescendantDigraph {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn out_edges(&self, i: usize) -> impl Iterator<Item = &Edge> {
        self.edges.iter().filter(move |e| e.from == i)
    }

    pub fn find(&self, state: &CanonicalState) -> Option<usize> {
        self.nodes.iter().skip(1).position(|n| n.state == *state).map(|i| i + 1)
    }

    /// Follow the R edge out of `from`, then single out-edges, stopping at the
    /// node whose successor is an identity class.
    fn return_path_end(&self, from: usize) -> Result<usize> {
        let err = || Error::Digraph(format!("no R-return path from node {}", self.nodes[from].label));
        let mut cur = self.out_edges(from).find(|e| e.dir == Dir::R).ok_or_else(err)?.to;
        for _ in 0..self.nodes.len() {
            let next: Vec<usize> = self.out_edges(cur).map(|e| e.to).collect();
            let [next] = next[..] else { return Err(err()) };
            if next != 0 && self.nodes[next].state.is_identity_class() {
                return Ok(cur);
            }
            cur = next;
        }
        Err(err())
    }

    /// Adjacency counts, `m[i][j]` = number of edges `i -> j`.
    pub fn adjacency(&self) -> Vec<Vec<u32>> {
        let n = self.nodes.len();
        let mut m = vec![vec![0u32; n]; n];
        for e in &self.edges {
            m[e.from][e.to] += 1;
        }
        m
    }

    pub fn adjacency_matrix(&self) -> Matrix<Poly> {
        let adj = self.adjacency();
        Matrix::from_fn(adj.len(), adj.len(), |i, j| {
            Poly::constant(Rational::from_integer(adj[i][j].into()))
        })
    }

    /// Walks from the start node of each length `0..=max_len`.
    pub fn walk_counts(&self, max_len: usize) -> Vec<BigUint> {
        let n = self.nodes.len();
        let mut v = vec![BigUint::zero(); n];
        v[self.start] = BigUint::one();
        let mut out = Vec::with_capacity(max_len + 1);
        for len in 0..=max_len {
            out.push(v.iter().sum());
            if len == max_len {
                break;
            }
            let mut w = vec![BigUint::zero(); n];
            for e in &self.edges {
                if !v[e.from].is_zero() {
                    w[e.to] += &v[e.from];
                }
            }
            v = w;
        }
        out
    }

    /// Walks of length `n - 2` from the start, which is `f_k(n) / 2` when the
    /// truncation does not reach that far. Lengths 1 and 2 give 1.
    pub fn walk_count(&self, n: usize) -> BigUint {
        if n <= 2 {
            return BigUint::one();
        }
        self.walk_counts(n - 2).pop().expect("nonempty")
    }

    /// Sum over the start row of `(I - xA)^{-1}`.
    pub fn walk_gf(&self) -> Result<RationalFunction> {
        let row = matrix_resolvent_row(&self.adjacency_matrix(), self.start)?;
        Ok(row.iter().fold(RationalFunction::zero(), |acc, f| &acc + f))
    }

    /// Graphviz rendering. Truncation edits are dashed.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph descendants_k{} {{", self.k);
        for (i, n) in self.nodes.iter().enumerate() {
            let _ = writeln!(out, "  n{i} [label=\"{}\"];", n.label);
        }
        for e in &self.edges {
            let style = if e.edited { ", style=dashed" } else { "" };
            let _ = writeln!(out, "  n{} -> n{} [label=\"{}\"{style}];", e.from, e.to, e.dir);
        }
        if let Some((from, label)) = &self.removed {
            let _ = writeln!(out, "  cut [label=\"{label}\", style=dashed];");
            let _ = writeln!(out, "  n{from} -> cut [label=\"L\", style=dashed];");
        }
        out.push_str("}\n");
        out
    }
}
