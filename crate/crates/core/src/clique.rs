//! k-clique detection and enumeration.
//!
//! Search extends a partial clique one vertex at a time, always taking the next
//! candidate in increasing label order and keeping only larger common
//! neighbours as future candidates. Cliques therefore come out in lexicographic
//! order of their sorted member lists. Before each extension the candidate pool
//! is peeled down to vertices with at least `need - 1` neighbours inside it.

use std::ops::ControlFlow;

use crate::error::{check_k, Result};
use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CliqueQuery {
    pub k: usize,
    pub limit: Option<usize>,
}

impl CliqueQuery {
    pub fn new(k: usize) -> Self {
        CliqueQuery { k, limit: None }
    }

    pub fn with_limit(k: usize, limit: usize) -> Self {
        CliqueQuery { k, limit: Some(limit) }
    }
}

pub fn has_k_clique(g: &Graph, k: usize) -> Result<bool> {
    Ok(find_k_clique(g, k)?.is_some())
}

/// Lexicographically smallest k-clique, if any.
pub fn find_k_clique(g: &Graph, k: usize) -> Result<Option<VertexSet>> {
    check_k(k)?;
    Ok(find_k_clique_within(g, k, &g.vertices()))
}

/// All k-cliques in lexicographic order, truncated at `q.limit`.
pub fn enumerate_k_cliques(g: &Graph, q: &CliqueQuery) -> Result<Vec<VertexSet>> {
    check_k(q.k)?;
    Ok(enumerate_k_cliques_within(g, q.k, &g.vertices(), q.limit))
}

/// Smallest k-clique of `G[within]`, in host labels. `k` must be positive.
pub(crate) fn find_k_clique_within(g: &Graph, k: usize, within: &VertexSet) -> Option<VertexSet> {
    let mut found = None;
    let _ = visit_k_cliques(g, k, within, &mut |c| {
        found = Some(VertexSet::from_vertices(g.n(), c.iter().copied()).unwrap());
        ControlFlow::Break(())
    });
    found
}

pub(crate) fn enumerate_k_cliques_within(
    g: &Graph,
    k: usize,
    within: &VertexSet,
    limit: Option<usize>,
) -> Vec<VertexSet> {
    let mut out = Vec::new();
    if limit == Some(0) {
        return out;
    }
    let _ = visit_k_cliques(g, k, within, &mut |c| {
        out.push(VertexSet::from_vertices(g.n(), c.iter().copied()).unwrap());
        if limit.is_some_and(|l| out.len() >= l) {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    out
}

/// Calls `visit` on each k-clique of `G[within]` (sorted members) in
/// lexicographic order until it breaks.
pub(crate) fn visit_k_cliques<F>(g: &Graph, k: usize, within: &VertexSet, visit: &mut F) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    debug_assert!(k >= 1);
    let mut clique = Vec::with_capacity(k);
    extend(g, &mut clique, within.with_universe(g.n()), k, visit)
}

fn extend<F>(g: &Graph, clique: &mut Vec<usize>, mut pool: VertexSet, need: usize, visit: &mut F) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    if need == 0 {
        return visit(clique);
    }
    peel(g, &mut pool, need - 1);
    if pool.len() < need {
        return ControlFlow::Continue(());
    }
    let members = pool.to_vec();
    for (i, &v) in members.iter().enumerate() {
        if members.len() - i < need {
            break;
        }
        let mut next = g.neighbors(v).intersection(&pool);
        // only larger labels, so each clique is produced once, in order
        for &u in &members[..=i] {
            next.remove(u);
        }
        if next.len() + 1 < need {
            continue;
        }
        clique.push(v);
        let flow = extend(g, clique, next, need - 1, visit);
        clique.pop();
        flow?;
    }
    ControlFlow::Continue(())
}

/// Repeatedly drops vertices with fewer than `min_degree` neighbours in `pool`.
fn peel(g: &Graph, pool: &mut VertexSet, min_degree: usize) {
    if min_degree == 0 {
        return;
    }
    loop {
        let weak: Vec<usize> = pool
            .iter()
            .filter(|&v| g.neighbors(v).intersection_len(pool) < min_degree)
            .collect();
        if weak.is_empty() {
            return;
        }
        for v in weak {
            pool.remove(v);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::generators::{build_complete, build_cycle, build_extremal};

    #[test]
    fn detection_examples() {
        assert!(!has_k_clique(&build_cycle(5).unwrap(), 3).unwrap());
        assert!(has_k_clique(&build_complete(4), 4).unwrap());
        assert!(has_k_clique(&build_extremal(7, 2).unwrap(), 3).unwrap());
        assert!(!has_k_clique(&build_complete(3), 4).unwrap());
        assert!(!has_k_clique(&Graph::empty(0), 1).unwrap());
        assert!(matches!(has_k_clique(&build_complete(3), 0), Err(Error::InvalidK(0))));
    }

    #[test]
    fn find_examples() {
        // triangle 0,1,2 with pendant 3 hanging off 2
        let g = Graph::from_edges(4, [(0, 1), (0, 2), (1, 2), (2, 3)]).unwrap();
        assert_eq!(find_k_clique(&g, 3).unwrap().unwrap().to_vec(), vec![0, 1, 2]);
        assert_eq!(find_k_clique(&Graph::empty(5), 2).unwrap(), None);
        assert_eq!(find_k_clique(&g, 1).unwrap().unwrap().to_vec(), vec![0]);
        // pendant edge sorts before the triangle edge 1-2
        assert_eq!(find_k_clique(&g, 2).unwrap().unwrap().to_vec(), vec![0, 1]);
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_k_cliques(&build_complete(4), &CliqueQuery::new(3)).unwrap().len(), 4);
        let edges: Vec<Vec<usize>> = enumerate_k_cliques(&build_cycle(5).unwrap(), &CliqueQuery::new(2))
            .unwrap()
            .iter()
            .map(VertexSet::to_vec)
            .collect();
        assert_eq!(edges, vec![vec![0, 1], vec![0, 4], vec![1, 2], vec![2, 3], vec![3, 4]]);
        let b54 = build_extremal(5, 4).unwrap();
        assert!(b54.is_complete());
        assert_eq!(enumerate_k_cliques(&b54, &CliqueQuery::new(4)).unwrap().len(), 5);
        assert_eq!(enumerate_k_cliques(&build_complete(6), &CliqueQuery::with_limit(3, 7)).unwrap().len(), 7);
        assert!(enumerate_k_cliques(&build_complete(6), &CliqueQuery::with_limit(3, 0)).unwrap().is_empty());
    }

    #[test]
    fn within_restricts_the_search() {
        let k5 = build_complete(5);
        let within = VertexSet::from_vertices(5, [1, 3, 4]).unwrap();
        assert_eq!(find_k_clique_within(&k5, 3, &within).unwrap().to_vec(), vec![1, 3, 4]);
        assert!(find_k_clique_within(&k5, 4, &within).is_none());
    }
}
