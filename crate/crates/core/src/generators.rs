//! Graph constructors: the extremal family, standard small graphs, seeded random
//! connected graphs, and exhaustive labeled enumeration.

use std::collections::BinaryHeap;
use std::cmp::Reverse;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{check_k, Error, Result};
use crate::graph::Graph;

/// Default largest `n` accepted by [`enumerate_connected`].
pub const DEFAULT_ENUMERATION_CAP: usize = 8;

/// Layout parameters of `B(n, k)`: `a` attached cliques on a path of `b` vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExtremalParams {
    pub n: usize,
    pub k: usize,
    pub a: usize,
    pub b: usize,
}

impl ExtremalParams {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        check_k(k)?;
        if n == 0 {
            return Err(Error::InvalidParameter("extremal graph needs n >= 1".into()));
        }
        let a = n / (k + 1);
        Ok(ExtremalParams { n, k, a, b: n - k * a })
    }
}

/// `B(n, k)`: `P_n` when `n <= k`; otherwise a path on `b` vertices (labels
/// `0..b`) with a `K_k` block fully joined to each of path vertices `0..a`.
/// Block `i` occupies labels `b + i*k .. b + (i+1)*k`.
pub fn build_extremal(n: usize, k: usize) -> Result<Graph> {
    let p = ExtremalParams::new(n, k)?;
    if n <= k {
        return build_path(n);
    }
    let mut edges: Vec<(usize, usize)> = (1..p.b).map(|i| (i - 1, i)).collect();
    for i in 0..p.a {
        let block: Vec<usize> = (p.b + i * k..p.b + (i + 1) * k).collect();
        for (j, &u) in block.iter().enumerate() {
            edges.push((i, u));
            edges.extend(block[j + 1..].iter().map(|&w| (u, w)));
        }
    }
    Graph::from_edges(n, edges)
}

pub fn build_path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("path needs n >= 1".into()));
    }
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

pub fn build_cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("cycle needs n >= 3 (got {n})")));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn build_complete(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).expect("valid")
}

/// A uniform random labeled spanning tree (decoded from a random Prüfer
/// sequence) plus every other pair independently with probability `p`.
pub fn gen_random_connected(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("random graph needs n >= 1".into()));
    }
    if !(p > 0.0 && p <= 1.0) {
        return Err(Error::InvalidParameter(format!("edge probability must lie in (0, 1] (got {p})")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g_edges = Vec::new();
    if n == 2 {
        g_edges.push((0, 1));
    } else if n > 2 {
        let prufer: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
        g_edges = prufer_decode(n, &prufer);
    }
    let tree = Graph::from_edges(n, g_edges.iter().copied())?;
    for u in 0..n {
        for v in u + 1..n {
            if !tree.has_edge(u, v) && rng.gen_bool(p) {
                g_edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, g_edges)
}

fn prufer_decode(n: usize, seq: &[usize]) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> = (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &s in seq {
        let Reverse(leaf) = leaves.pop().expect("a Prüfer sequence always leaves a leaf");
        edges.push((leaf.min(s), leaf.max(s)));
        degree[s] -= 1;
        if degree[s] == 1 {
            leaves.push(Reverse(s));
        }
    }
    let Reverse(u) = leaves.pop().unwrap();
    let Reverse(v) = leaves.pop().unwrap();
    edges.push((u.min(v), u.max(v)));
    edges
}

/// Bit `i` of a mask selects the `i`-th pair `(u, v)`, `u < v`, in
/// lexicographic order.
pub fn pair_order(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

/// Graph selected by `mask` under [`pair_order`].
pub fn graph_from_mask(n: usize, pairs: &[(usize, usize)], mask: u64) -> Graph {
    let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
    Graph::from_edges(n, edges).expect("pairs are in range")
}

/// Stream of connected labeled graphs on `n` vertices in increasing mask order.
#[derive(Debug, Clone)]
pub struct EnumerationCursor {
    n: usize,
    pairs: Vec<(usize, usize)>,
    mask: u64,
    end: u64,
    connected_only: bool,
}

impl EnumerationCursor {
    /// Masks `start..end` only; lets callers split the space across workers.
    pub fn range(n: usize, start: u64, end: u64, connected_only: bool) -> Self {
        let pairs = pair_order(n);
        let end = end.min(Self::mask_count(n));
        EnumerationCursor { n, pairs, mask: start, end, connected_only }
    }

    /// `2^(n choose 2)`; `n` must be at most 11.
    pub fn mask_count(n: usize) -> u64 {
        1u64 << (n * n.saturating_sub(1) / 2)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The next mask that will be examined.
    pub fn mask(&self) -> u64 {
        self.mask
    }
}

impl Iterator for EnumerationCursor {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.mask < self.end {
            let g = graph_from_mask(self.n, &self.pairs, self.mask);
            self.mask += 1;
            if !self.connected_only || g.is_connected() {
                return Some(g);
            }
        }
        None
    }
}

pub fn enumerate_connected(n: usize) -> Result<EnumerationCursor> {
    enumerate_connected_with_cap(n, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_connected_with_cap(n: usize, cap: usize) -> Result<EnumerationCursor> {
    if n == 0 {
        return Err(Error::InvalidParameter("enumeration needs n >= 1".into()));
    }
    if n > cap || n > 11 {
        return Err(Error::EnumerationCapExceeded { n, cap: cap.min(11) });
    }
    Ok(EnumerationCursor::range(n, 0, u64::MAX, true))
}
