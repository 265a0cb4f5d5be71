//! Dense simple undirected graphs over `0..n` and the vertex-set algebra used
//! throughout the crate.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize, Serializer};

use crate::error::{check_k, Error, Result};

const WORD: usize = 64;

/// A subset of `0..universe`, stored as a bitset.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct VertexSet {
    universe: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn new(universe: usize) -> Self {
        VertexSet {
            universe,
            words: vec![0; universe.div_ceil(WORD)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::new(universe);
        for (i, w) in s.words.iter_mut().enumerate() {
            let lo = i * WORD;
            let hi = (lo + WORD).min(universe);
            *w = if hi - lo == WORD { u64::MAX } else { (1u64 << (hi - lo)) - 1 };
        }
        s
    }

    /// Builds a set from members, rejecting anything outside `0..universe`.
    pub fn from_vertices<I: IntoIterator<Item = usize>>(universe: usize, vertices: I) -> Result<Self> {
        let mut s = Self::new(universe);
        for v in vertices {
            if v >= universe {
                return Err(Error::VertexOutOfRange { vertex: v, n: universe });
            }
            s.insert(v);
        }
        Ok(s)
    }

    pub fn singleton(universe: usize, v: usize) -> Self {
        let mut s = Self::new(universe);
        s.insert(v);
        s
    }

    #[inline]
    pub fn universe(&self) -> usize {
        self.universe
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < self.universe);
        self.words[v / WORD] |= 1u64 << (v % WORD);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < self.universe);
        self.words[v / WORD] &= !(1u64 << (v % WORD));
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.universe && self.words[v / WORD] & (1u64 << (v % WORD)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Smallest member.
    pub fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * WORD + w.trailing_zeros() as usize)
    }

    /// Members in increasing order.
    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.difference_with(other);
        s
    }

    pub fn complement(&self) -> VertexSet {
        Self::full(self.universe).difference(self)
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
            && self.words.iter().skip(other.words.len()).all(|&w| w == 0)
    }

    /// Re-homes the set in a universe of a different size. Members must fit.
    pub fn with_universe(&self, universe: usize) -> VertexSet {
        let mut s = Self::new(universe);
        for v in self.iter() {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * WORD + bit);
            }
            self.index += 1;
            if self.index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.index];
        }
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

/// Which of the excluded graphs a connected graph is, relative to `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ExceptionKind {
    /// The graph is a copy of `K_k`.
    KClique,
    /// `k = 2` and the graph is a 5-cycle.
    FiveCycleAtK2,
    None,
}

impl fmt::Display for ExceptionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExceptionKind::KClique => f.write_str("k-clique"),
            ExceptionKind::FiveCycleAtK2 => f.write_str("5-cycle at k=2"),
            ExceptionKind::None => f.write_str("none"),
        }
    }
}

/// Immutable simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

/// A graph carved out of a host graph, remembering where each vertex came from.
#[derive(Clone, Debug)]
pub struct Subgraph {
    pub graph: Graph,
    /// `labels[i]` is the host vertex that became vertex `i`.
    pub labels: Vec<usize>,
    host_n: usize,
}

impl Subgraph {
    /// Maps a set of subgraph vertices back to host labels.
    pub fn lift(&self, set: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new(self.host_n);
        for v in set {
            out.insert(self.labels[v]);
        }
        out
    }

    pub fn host_n(&self) -> usize {
        self.host_n
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![VertexSet::new(n); n],
        }
    }

    /// Builds a graph from an edge list. Repeated edges collapse; self-loops
    /// and out-of-range endpoints are rejected.
    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(n: usize, edges: I) -> Result<Self> {
        let mut g = Self::empty(n);
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        Ok(g)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        let mut s = self.adj[v].clone();
        s.insert(v);
        s
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].contains(v)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    fn check_set(&self, s: &VertexSet) -> Result<()> {
        if let Some(v) = s.iter().find(|&v| v >= self.n()) {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n() });
        }
        Ok(())
    }

    /// `N[S]`: the members of `S` together with all their neighbours.
    pub fn closed_neighborhood(&self, s: &VertexSet) -> Result<VertexSet> {
        self.check_set(s)?;
        Ok(self.closed_neighborhood_unchecked(s))
    }

    pub(crate) fn closed_neighborhood_unchecked(&self, s: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new(self.n());
        for v in s {
            out.union_with(&self.adj[v]);
            out.insert(v);
        }
        out
    }

    /// `G[S]`, relabeled densely in increasing order of host label.
    pub fn induced(&self, s: &VertexSet) -> Result<Subgraph> {
        self.check_set(s)?;
        Ok(self.induced_unchecked(s))
    }

    pub(crate) fn induced_unchecked(&self, s: &VertexSet) -> Subgraph {
        let labels = s.to_vec();
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in labels.iter().enumerate() {
            index[v] = i;
        }
        let m = labels.len();
        let adj = labels
            .iter()
            .map(|&v| {
                let mut row = VertexSet::new(m);
                for w in self.adj[v].iter().filter(|&w| s.contains(w)) {
                    row.insert(index[w]);
                }
                row
            })
            .collect();
        Subgraph {
            graph: Graph { adj },
            labels,
            host_n: self.n(),
        }
    }

    /// `G - S`.
    pub fn delete(&self, s: &VertexSet) -> Result<Subgraph> {
        self.check_set(s)?;
        Ok(self.induced_unchecked(&s.with_universe(self.n()).complement()))
    }

    /// Connected components, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(&self.vertices())
    }

    /// Components of `G[within]`, ordered by smallest member, in host labels.
    pub fn components_within(&self, within: &VertexSet) -> Vec<VertexSet> {
        let mut unseen = within.clone();
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        while let Some(start) = unseen.first() {
            let mut comp = VertexSet::new(self.n());
            unseen.remove(start);
            comp.insert(start);
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                let fresh = self.adj[u].intersection(&unseen);
                for w in &fresh {
                    comp.insert(w);
                    queue.push_back(w);
                }
                unseen.difference_with(&fresh);
            }
            out.push(comp);
        }
        out
    }

    /// The component of `G[within]` containing `v`.
    pub fn component_of(&self, within: &VertexSet, v: usize) -> VertexSet {
        let mut comp = VertexSet::singleton(self.n(), v);
        let mut frontier = comp.clone();
        while !frontier.is_empty() {
            let mut next = VertexSet::new(self.n());
            for u in &frontier {
                next.union_with(&self.adj[u]);
            }
            next.intersect_with(within);
            next.difference_with(&comp);
            comp.union_with(&next);
            frontier = next;
        }
        comp
    }

    /// True iff `n >= 1` and there is exactly one component.
    pub fn is_connected(&self) -> bool {
        self.n() >= 1 && self.component_of(&self.vertices(), 0).len() == self.n()
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.adj.iter().all(|row| row.len() + 1 == n)
    }

    /// Connected, five vertices, every degree two.
    pub fn is_five_cycle(&self) -> bool {
        self.n() == 5 && self.adj.iter().all(|row| row.len() == 2) && self.is_connected()
    }

    pub fn classify_exception(&self, k: usize) -> Result<ExceptionKind> {
        check_k(k)?;
        Ok(if self.n() == k && self.is_complete() {
            ExceptionKind::KClique
        } else if k == 2 && self.is_five_cycle() {
            ExceptionKind::FiveCycleAtK2
        } else {
            ExceptionKind::None
        })
    }

    /// Whether `G[s]` is complete.
    pub(crate) fn is_complete_within(&self, s: &VertexSet) -> bool {
        let size = s.len();
        s.iter().all(|v| self.adj[v].intersection_len(s) + 1 == size)
    }

    /// Whether `G[s]` is a 5-cycle.
    pub(crate) fn is_five_cycle_within(&self, s: &VertexSet) -> bool {
        s.len() == 5
            && s.iter().all(|v| self.adj[v].intersection_len(s) == 2)
            && self.component_of(s, s.first().unwrap()).len() == 5
    }

    /// Whether `G[s]` is a copy of `K_k` or, at `k = 2`, of `C_5`.
    pub(crate) fn is_exceptional_within(&self, s: &VertexSet, k: usize) -> bool {
        (s.len() == k && self.is_complete_within(s)) || (k == 2 && self.is_five_cycle_within(s))
    }

    /// Disjoint union, relabeling `other` after `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let offset = self.n();
        let edges = self
            .edges()
            .chain(other.edges().map(|(u, v)| (u + offset, v + offset)))
            .collect::<Vec<_>>();
        Graph::from_edges(offset + other.n(), edges).expect("relabeled edges are in range")
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges().collect::<Vec<_>>())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(n, vs.iter().copied()).unwrap()
    }

    fn c5() -> Graph {
        Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    #[test]
    fn bitset_basics() {
        let mut s = VertexSet::new(130);
        for v in [0, 63, 64, 129] {
            s.insert(v);
        }
        assert_eq!(s.to_vec(), vec![0, 63, 64, 129]);
        assert_eq!(s.len(), 4);
        assert_eq!(s.first(), Some(0));
        s.remove(0);
        assert_eq!(s.first(), Some(63));
        assert_eq!(VertexSet::full(130).len(), 130);
        assert_eq!(VertexSet::full(64).len(), 64);
        assert_eq!(s.complement().len(), 127);
        assert!(VertexSet::new(0).is_empty());
        assert_eq!(VertexSet::new(0).iter().next(), None);
    }

    #[test]
    fn closed_neighborhood_examples() {
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.closed_neighborhood(&set(3, &[1])).unwrap().to_vec(), vec![0, 1, 2]);
        assert!(p3.closed_neighborhood(&VertexSet::new(3)).unwrap().is_empty());
        assert_eq!(c5().closed_neighborhood(&set(5, &[0, 2])).unwrap().to_vec(), vec![0, 1, 2, 3, 4]);
        assert!(matches!(
            p3.closed_neighborhood(&set(9, &[7])),
            Err(Error::VertexOutOfRange { vertex: 7, n: 3 })
        ));
    }

    #[test]
    fn delete_examples() {
        let k3 = complete(4).delete(&set(4, &[3])).unwrap();
        assert!(k3.graph.is_complete());
        assert_eq!(k3.graph.n(), 3);

        let p4 = c5().delete(&set(5, &[0])).unwrap();
        assert_eq!(p4.labels, vec![1, 2, 3, 4]);
        assert_eq!(p4.graph.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2), (2, 3)]);
        assert_eq!(p4.lift(&set(4, &[0, 3])).to_vec(), vec![1, 4]);

        let gone = c5().delete(&VertexSet::full(5)).unwrap();
        assert_eq!(gone.graph.n(), 0);
        assert!(c5().delete(&set(6, &[5])).is_err());
    }

    #[test]
    fn induced_examples() {
        assert!(complete(5).induced(&set(5, &[0, 1, 2])).unwrap().graph.is_complete());
        let sub = c5().induced(&set(5, &[0, 1, 3])).unwrap();
        assert_eq!(sub.graph.edges().collect::<Vec<_>>(), vec![(0, 1)]);
        assert_eq!(sub.labels, vec![0, 1, 3]);
        assert_eq!(c5().induced(&VertexSet::new(5)).unwrap().graph.n(), 0);
    }

    #[test]
    fn components_examples() {
        let two = complete(3).disjoint_union(&complete(3));
        let comps = two.components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].to_vec(), vec![0, 1, 2]);
        assert_eq!(comps[1].to_vec(), vec![3, 4, 5]);
        assert_eq!(c5().components(), vec![VertexSet::full(5)]);
        assert_eq!(Graph::empty(4).components().len(), 4);
        assert!(Graph::empty(0).components().is_empty());
    }

    #[test]
    fn connectivity_examples() {
        let p5 = Graph::from_edges(5, (0..4).map(|i| (i, i + 1))).unwrap();
        assert!(p5.is_connected());
        assert!(!Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap().is_connected());
        assert!(Graph::empty(1).is_connected());
        assert!(!Graph::empty(0).is_connected());
    }

    #[test]
    fn exception_classification() {
        assert_eq!(complete(3).classify_exception(3).unwrap(), ExceptionKind::KClique);
        assert_eq!(c5().classify_exception(2).unwrap(), ExceptionKind::FiveCycleAtK2);
        assert_eq!(c5().classify_exception(3).unwrap(), ExceptionKind::None);
        assert_eq!(complete(3).classify_exception(2).unwrap(), ExceptionKind::None);
        assert_eq!(Graph::empty(1).classify_exception(1).unwrap(), ExceptionKind::KClique);
        assert!(matches!(c5().classify_exception(0), Err(Error::InvalidK(0))));
        // two disjoint triangles have all degrees 2 on 6 vertices; a 5-vertex
        // disconnected 2-regular graph cannot exist, but a 5-vertex non-cycle can
        let bowtie_less = Graph::from_edges(5, [(0, 1), (1, 2), (2, 0), (3, 4)]).unwrap();
        assert_eq!(bowtie_less.classify_exception(2).unwrap(), ExceptionKind::None);
    }

    #[test]
    fn exceptional_within_matches_induced_classification() {
        let g = c5().disjoint_union(&complete(2));
        assert!(g.is_exceptional_within(&set(7, &[0, 1, 2, 3, 4]), 2));
        assert!(g.is_exceptional_within(&set(7, &[5, 6]), 2));
        assert!(!g.is_exceptional_within(&set(7, &[5, 6]), 3));
        assert!(!g.is_exceptional_within(&set(7, &[0, 1, 2]), 2));
    }

    #[test]
    fn from_edges_rejects_bad_input() {
        assert!(matches!(Graph::from_edges(3, [(1, 1)]), Err(Error::SelfLoop(1))));
        assert!(matches!(Graph::from_edges(3, [(0, 3)]), Err(Error::VertexOutOfRange { .. })));
        assert_eq!(Graph::from_edges(3, [(0, 1), (1, 0)]).unwrap().edge_count(), 1);
    }
}
