//! Isolating-set certificates and exact computation of `iota(G, k)`.
//!
//! [`iota_oracle`] is the reference: it tries every subset by increasing size.
//! [`iota_solve`] splits the graph into components and runs a branch-and-bound
//! search on each. The search keeps an incumbent from [`greedy_upper_bound`],
//! picks a k-clique `C` that is still alive in the residual graph and branches on
//! which vertex of `N[C]` joins the set, excluding earlier siblings from later
//! branches. A packing of live cliques with pairwise disjoint candidate sets
//! gives the lower bound.

use std::ops::ControlFlow;
use std::time::{Duration, Instant};

use itertools::Itertools;

use crate::clique::{find_k_clique_within, visit_k_cliques};
use crate::error::{check_k, Error, Result};
use crate::graph::{Graph, VertexSet};

/// Default largest `n` accepted by [`iota_oracle`].
pub const DEFAULT_ORACLE_CAP: usize = 20;

/// How many live cliques the solver inspects when choosing where to branch.
const BRANCH_SCAN_LIMIT: usize = 64;
/// How many live cliques the packing bound inspects.
const PACKING_SCAN_LIMIT: usize = 512;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsolationCertificate {
    pub candidate: VertexSet,
    pub valid: bool,
    /// A k-clique of `G - N[candidate]`, in `G`'s labels, when invalid.
    pub witness: Option<VertexSet>,
    pub residual_size: usize,
}

#[derive(Debug, Clone)]
pub struct SolveReport {
    pub iota: usize,
    pub optimal_set: VertexSet,
    pub nodes_expanded: u64,
    pub elapsed: Duration,
}

pub fn verify_isolating(g: &Graph, k: usize, d: &VertexSet) -> Result<IsolationCertificate> {
    check_k(k)?;
    let covered = g.closed_neighborhood(d)?;
    let residual = covered.complement();
    let witness = find_k_clique_within(g, k, &residual);
    Ok(IsolationCertificate {
        candidate: d.with_universe(g.n()),
        valid: witness.is_none(),
        witness,
        residual_size: residual.len(),
    })
}

pub(crate) fn is_isolating(g: &Graph, k: usize, d: &VertexSet) -> bool {
    let residual = g.closed_neighborhood_unchecked(d).complement();
    find_k_clique_within(g, k, &residual).is_none()
}

pub fn iota_oracle(g: &Graph, k: usize) -> Result<SolveReport> {
    iota_oracle_with_cap(g, k, DEFAULT_ORACLE_CAP)
}

/// Tries all subsets by increasing size, lexicographically within a size, and
/// returns the first one that isolates.
pub fn iota_oracle_with_cap(g: &Graph, k: usize, cap: usize) -> Result<SolveReport> {
    check_k(k)?;
    let n = g.n();
    if n > cap {
        return Err(Error::OracleCapExceeded { n, cap });
    }
    let start = Instant::now();
    let mut tested = 0u64;
    for size in 0..=n {
        for combo in (0..n).combinations(size) {
            tested += 1;
            let d = VertexSet::from_vertices(n, combo)?;
            if is_isolating(g, k, &d) {
                return Ok(SolveReport {
                    iota: size,
                    optimal_set: d,
                    nodes_expanded: tested,
                    elapsed: start.elapsed(),
                });
            }
        }
    }
    unreachable!("V(G) always isolates")
}

/// Exact `iota(G, k)` by component decomposition plus branch-and-bound.
pub fn iota_solve(g: &Graph, k: usize) -> Result<SolveReport> {
    check_k(k)?;
    let start = Instant::now();
    let mut optimal = VertexSet::new(g.n());
    let mut nodes = 0u64;
    for comp in g.components() {
        let sub = g.induced_unchecked(&comp);
        let mut search = BranchAndBound::new(&sub.graph, k);
        search.run();
        nodes += search.nodes;
        optimal.union_with(&sub.lift(&search.best));
    }
    Ok(SolveReport {
        iota: optimal.len(),
        optimal_set: optimal,
        nodes_expanded: nodes,
        elapsed: start.elapsed(),
    })
}

/// Repeatedly kills the first live k-clique with its highest-degree vertex.
pub fn greedy_upper_bound(g: &Graph, k: usize) -> Result<VertexSet> {
    check_k(k)?;
    Ok(greedy(g, k))
}

fn greedy(g: &Graph, k: usize) -> VertexSet {
    let mut chosen = VertexSet::new(g.n());
    let mut residual = g.vertices();
    while let Some(c) = find_k_clique_within(g, k, &residual) {
        // max_by_key keeps the last maximum; walk in reverse so ties go to the smallest label
        let pick = c.to_vec().into_iter().rev().max_by_key(|&v| g.degree(v)).unwrap();
        chosen.insert(pick);
        residual.difference_with(&g.closed_neighbors(pick));
    }
    chosen
}

struct BranchAndBound<'g> {
    g: &'g Graph,
    k: usize,
    closed: Vec<VertexSet>,
    best: VertexSet,
    nodes: u64,
}

impl<'g> BranchAndBound<'g> {
    fn new(g: &'g Graph, k: usize) -> Self {
        let closed = (0..g.n()).map(|v| g.closed_neighbors(v)).collect();
        BranchAndBound { g, k, closed, best: greedy(g, k), nodes: 0 }
    }

    fn run(&mut self) {
        let n = self.g.n();
        let mut chosen = Vec::new();
        self.search(&mut chosen, self.g.vertices(), VertexSet::new(n));
    }

    fn closed_of(&self, clique: &[usize]) -> VertexSet {
        let mut s = VertexSet::new(self.g.n());
        for &v in clique {
            s.union_with(&self.closed[v]);
        }
        s
    }

    fn search(&mut self, chosen: &mut Vec<usize>, residual: VertexSet, mut forbidden: VertexSet) {
        self.nodes += 1;
        if chosen.len() + 1 > self.best.len() {
            // even one more vertex cannot beat the incumbent; only an already
            // isolating `chosen` could, and it is no smaller than best
            return;
        }
        // Choose the live clique with the fewest allowed hitters.
        let mut target: Option<VertexSet> = None;
        let mut seen = 0;
        let _ = visit_k_cliques(self.g, self.k, &residual, &mut |c| {
            seen += 1;
            let allowed = self.closed_of(c).difference(&forbidden);
            if target.as_ref().is_none_or(|t| allowed.len() < t.len()) {
                target = Some(allowed);
            }
            if seen >= BRANCH_SCAN_LIMIT || target.as_ref().is_some_and(|t| t.len() <= 1) {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
        let Some(candidates) = target else {
            // residual is clique-free and chosen.len() < best.len()
            self.best = VertexSet::from_vertices(self.g.n(), chosen.iter().copied()).unwrap();
            return;
        };
        if candidates.is_empty() {
            return;
        }
        if chosen.len() + self.packing_bound(&residual, &forbidden) >= self.best.len() {
            return;
        }
        for u in &candidates {
            chosen.push(u);
            let next = residual.difference(&self.closed[u]);
            self.search(chosen, next, forbidden.clone());
            chosen.pop();
            forbidden.insert(u);
            if chosen.len() + 1 >= self.best.len() {
                break;
            }
        }
    }

    /// Live cliques whose allowed hitters are pairwise disjoint each need their
    /// own new vertex.
    fn packing_bound(&self, residual: &VertexSet, forbidden: &VertexSet) -> usize {
        let mut used = VertexSet::new(self.g.n());
        let mut count = 0;
        let mut seen = 0;
        let _ = visit_k_cliques(self.g, self.k, residual, &mut |c| {
            seen += 1;
            let allowed = self.closed_of(c).difference(forbidden);
            if !allowed.intersects(&used) {
                used.union_with(&allowed);
                count += 1;
            }
            if seen >= PACKING_SCAN_LIMIT {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
        count
    }
}
