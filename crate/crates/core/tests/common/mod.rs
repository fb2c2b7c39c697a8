//! Reference values shared by the integration tests.
#![allow(dead_code)]

use convexenum::perms::Permutation;
use convexenum::{Poly, Rational, RationalFunction};
use num_bigint::BigInt;

/// Known counts for n = 1..12: (f_0, f_1, f_2).
pub const REFERENCE_COUNTS: [(u64, u64, u64); 12] = [
    (1, 1, 1),
    (2, 2, 2),
    (4, 4, 4),
    (6, 8, 8),
    (8, 14, 16),
    (8, 24, 30),
    (8, 40, 56),
    (8, 66, 102),
    (8, 106, 186),
    (8, 170, 336),
    (8, 270, 606),
    (8, 426, 1088),
];

pub fn reference_count(k: u32, n: usize) -> u64 {
    let row = REFERENCE_COUNTS[n - 1];
    match k {
        0 => row.0,
        1 => row.1,
        2 => row.2,
        _ => unreachable!(),
    }
}

/// A reference rational function, coefficients in ascending powers.
pub struct ReferenceGf {
    pub name: &'static str,
    pub k: u32,
    pub upper: bool,
    pub num: &'static [i64],
    pub den: &'static [i64],
    pub root: &'static str,
    pub rate: &'static str,
}

pub const F1_MINUS: ReferenceGf = ReferenceGf {
    name: "F1-",
    k: 1,
    upper: false,
    num: &[-1, -1, -2, -2, -2, -2, -1, 1, 1, 2, 1, 1, 0, 0, -1],
    den: &[-1, 1, 0, 1, 1, 0, 0, 0, -2, -1, -2, 0, 0, 1, 0, 1],
    root: "0.65149869151455837735",
    rate: "1.5349224995",
};

pub const F1_PLUS: ReferenceGf = ReferenceGf {
    name: "F1+",
    k: 1,
    upper: true,
    num: &[-1, 0, -1, 0, 0, 0, 1, 2, 1, 2, 1, 1, 0, 0, -1],
    den: &[-1, 2, -1, 1, 0, -1, 0, 0, -1, 0, -1, 1, -1, 1, 0, 1],
    root: "0.65145978572056851317",
    rate: "1.535014167",
};

pub const F2_MINUS: ReferenceGf = ReferenceGf {
    name: "F2-",
    k: 2,
    upper: false,
    num: &[1, 1, 1, 2, 2, 2, 2, 1, 0, 0, -1, -1, -1],
    den: &[1, -1, -1, 0, -1, -1, 0, 0, 1, 2, 1, 1, 1, 1, -1],
    root: "0.55979335021175578170",
    rate: "1.786373489",
};

pub const F2_PLUS: ReferenceGf = ReferenceGf {
    name: "F2+",
    k: 2,
    upper: true,
    num: &[1, 0, 0, 1, 0, 0, 0, -1, -1, -1, -2, -1, -1],
    den: &[1, -2, 0, 1, -1, 0, 1, 0, 1, 0, 0, 1, 0, 1, -1],
    root: "0.55977426822528580510",
    rate: "1.786434384",
};

pub const REFERENCE_GFS: [&ReferenceGf; 4] = [&F1_MINUS, &F1_PLUS, &F2_MINUS, &F2_PLUS];

impl ReferenceGf {
    pub fn ratfun(&self) -> RationalFunction {
        RationalFunction::from_integers(self.num, self.den).unwrap()
    }

    pub fn den_poly(&self) -> Poly {
        Poly::new(self.den.iter().map(|&v| Rational::from_integer(v.into())).collect())
    }
}

/// Reference transfer matrix for k = 1 (22 nodes) as successor lists, 1-based.
pub const MATRIX_K1: [&[usize]; 22] = [
    &[2, 4], &[2, 4], &[2], &[3, 5], &[6, 8], &[7], &[4], &[9, 12], &[10], &[11], &[5],
    &[13, 17], &[14], &[15], &[16], &[8], &[18], &[19], &[20], &[21], &[22], &[12],
];

/// Reference transfer matrix for k = 2 (24 nodes) as successor lists, 1-based.
pub const MATRIX_K2: [&[usize]; 24] = [
    &[2, 3], &[3, 4], &[2, 3], &[5, 7], &[6], &[2, 3], &[8, 10], &[9], &[2], &[11, 14], &[12], &[13],
    &[4], &[15, 19], &[16], &[17], &[18], &[7], &[20], &[21], &[22], &[23], &[24], &[10],
];

/// 0-based successor lists.
pub fn successors(m: &[&[usize]]) -> Vec<Vec<usize>> {
    m.iter().map(|row| row.iter().map(|j| j - 1).collect()).collect()
}

/// Walks of length 0..=len from node 0.
pub fn walks_from_first(succ: &[Vec<usize>], len: usize) -> Vec<u64> {
    let mut v = vec![0u64; succ.len()];
    v[0] = 1;
    let mut out = Vec::new();
    for _ in 0..=len {
        out.push(v.iter().sum());
        let mut w = vec![0u64; succ.len()];
        for (i, js) in succ.iter().enumerate() {
            for &j in js {
                w[j] += v[i];
            }
        }
        v = w;
    }
    out
}

/// Coarsest partition in which equivalent nodes have the same multiset of
/// successor classes (counting bisimulation). Returns the class of each node.
pub fn bisimulation_classes(succ: &[Vec<usize>]) -> Vec<usize> {
    let n = succ.len();
    let mut class = vec![0usize; n];
    let mut count = 1;
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut s: Vec<usize> = succ[v].iter().map(|&w| class[w]).collect();
                s.sort_unstable();
                (class[v], s)
            })
            .collect();
        let mut keys = sigs.clone();
        keys.sort();
        keys.dedup();
        class = sigs.iter().map(|s| keys.binary_search(s).unwrap()).collect();
        if keys.len() == count {
            return class;
        }
        count = keys.len();
    }
}

pub fn class_count(succ: &[Vec<usize>]) -> usize {
    let mut c = bisimulation_classes(succ);
    c.sort_unstable();
    c.dedup();
    c.len()
}

/// Whether node 0 of `g` and node 0 of `h` are counting-bisimilar, which
/// forces equal walk counts of every length.
pub fn roots_bisimilar(g: &[Vec<usize>], h: &[Vec<usize>]) -> bool {
    let offset = g.len();
    let union: Vec<Vec<usize>> = g
        .iter()
        .cloned()
        .chain(h.iter().map(|row| row.iter().map(|j| j + offset).collect()))
        .collect();
    let classes = bisimulation_classes(&union);
    classes[0] == classes[offset]
}

pub fn parse_decimal(s: &str) -> Rational {
    let (int, frac) = s.split_once('.').unwrap_or((s, ""));
    let den = BigInt::from(10).pow(frac.len() as u32);
    let num: BigInt = format!("{int}{frac}").parse().unwrap();
    Rational::new(num, den)
}

/// Whether three consecutive entries of `p` are order-isomorphic to `pattern`.
pub fn has_factor(p: &Permutation, pattern: [u32; 3]) -> bool {
    p.entries().windows(3).any(|w| {
        let mut idx = [0usize, 1, 2];
        idx.sort_by_key(|&i| w[i]);
        let mut rank = [0u32; 3];
        for (r, &i) in idx.iter().enumerate() {
            rank[i] = r as u32 + 1;
        }
        rank == pattern
    })
}

/// Which of the six endpoint cases hold: starts 12, 13, 23 or ends 21, 31, 32.
pub fn endpoint_cases(p: &Permutation) -> usize {
    let e = p.entries();
    let n = e.len();
    let (a, b, c, d) = (e[0], e[1], e[n - 2], e[n - 1]);
    [(a, b) == (1, 2), (a, b) == (1, 3), (a, b) == (2, 3), (d, c) == (1, 2), (d, c) == (1, 3), (d, c) == (2, 3)]
        .iter()
        .filter(|&&x| x)
        .count()
}
