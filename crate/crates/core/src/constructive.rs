//! Recursive construction of a k-clique isolating set of size at most
//! `floor(n / (k + 1))` for a connected graph that is neither `K_k` nor, at
//! `k = 2`, the 5-cycle.
//!
//! One step of the recursion on a graph `G`:
//!
//! 1. graphs on at most two vertices are settled directly;
//! 2. with no k-clique the empty set already isolates;
//! 3. otherwise take the smallest k-clique `C` and the smallest `v` in `C` with a
//!    neighbour outside `C`; if `N[v]` is everything, `{v}` isolates;
//! 4. split `G - N[v]` into components. Components that are copies of `K_k` (or
//!    of `C_5` at `k = 2`) are *exceptional*. A component is *linked* to a
//!    neighbour `x` of `v` when some edge joins them. With no exceptional
//!    component, take `v` plus a recursive set for each component;
//! 5. if some exceptional component is linked to a single `x` (case 2), `x`
//!    handles every exceptional component hanging only off `x`, and the rest
//!    of the graph is solved around it;
//! 6. otherwise (case 1) pick the first exceptional component `H'` and its
//!    smallest link `x`, remove `X = {x} + V(H')`, and branch on the shape of
//!    the component `G*_v` of `G - X` that contains `v`.
//!
//! Recursive calls substitute constructed sets for minimum ones; the size
//! accounting only needs the `|V| / (k + 1)` bound, which every recursive
//! return satisfies.

use serde::Serialize;

use crate::clique::find_k_clique_within;
use crate::error::{check_k, Error, Result};
use crate::graph::{ExceptionKind, Graph, VertexSet};
use crate::isolation::is_isolating;

/// Which rule produced a step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Branch {
    BaseSmall,
    NoClique,
    DominatingVertex,
    NoExceptional,
    #[serde(rename = "Case1_Sub1")]
    Case1Sub1,
    #[serde(rename = "Case1_Sub2")]
    Case1Sub2,
    #[serde(rename = "Case1_Sub3")]
    Case1Sub3,
    Case2,
}

/// How a case-1 step with `G*_v` a clique or a 5-cycle finished.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Terminal {
    /// What is left after `{v, x}` and the covered part of `H'` has no k-clique.
    CliqueFreeRemainder,
    /// Take `z` and recurse on `G - Z`.
    RecurseOutsideZ,
    /// `n = 2k + 1` and `{z}` alone isolates.
    SingleZ,
    /// `n = 2k + 1`, `k >= 3`, and `{z'}` alone isolates.
    SingleZPrime,
    /// Five vertices at `k = 2`: any vertex of degree at least 3.
    HighDegreeVertex,
    /// Eight vertices at `k = 2` with `H'` a 5-cycle: `{y, z'}`.
    PairYZPrime,
    /// `G*_v` a 5-cycle: take `v3` and recurse on `G - {v2, v3, v4}`.
    RecurseWithoutY,
    /// `G - {v2, v3, v4}` is itself a 5-cycle: `{v, v1}` or `{v, v3}`.
    FiveCycleRemainder,
}

/// One step of the construction, in the labels of the top-level input.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub branch: Branch,
    pub depth: usize,
    /// Vertex set of the subproblem this step ran on.
    pub vertices: Vec<usize>,
    pub pivot: Option<usize>,
    pub link: Option<usize>,
    /// Vertices this step put into the set directly (recursive calls add more).
    pub chosen: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub terminal: Option<Terminal>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundResult {
    pub set: VertexSet,
    /// `floor(n / (k + 1))`.
    pub bound: usize,
    pub trace: Vec<TraceStep>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum ComponentOutcome {
    Bound { component: VertexSet, result: BoundResult },
    Exceptional { component: VertexSet, kind: ExceptionKind, set: VertexSet },
}

impl ComponentOutcome {
    pub fn set(&self) -> &VertexSet {
        match self {
            ComponentOutcome::Bound { result, .. } => &result.set,
            ComponentOutcome::Exceptional { set, .. } => set,
        }
    }
}

/// Deep recursions on large inputs run on a thread with this much stack.
const LARGE_STACK: usize = 512 << 20;
const LARGE_INPUT: usize = 1024;

/// Builds an isolating set of size at most `floor(n / (k + 1))`.
///
/// Fails with [`Error::Disconnected`] on disconnected (or empty) input and with
/// [`Error::Exceptional`] on `K_k` or, at `k = 2`, `C_5`.
pub fn theorem1_set(g: &Graph, k: usize) -> Result<BoundResult> {
    check_k(k)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    match g.classify_exception(k)? {
        ExceptionKind::None => {}
        kind => return Err(Error::Exceptional(kind)),
    }
    let labels: Vec<usize> = (0..g.n()).collect();
    build_top(g, k, &labels)
}

fn build_top(g: &Graph, k: usize, labels: &[usize]) -> Result<BoundResult> {
    let run = || {
        let mut builder = Builder {
            k,
            trace: Vec::new(),
            check_each: cfg!(debug_assertions),
        };
        builder.build(g, labels, 0).map(|set| (set, builder.trace))
    };
    let (set, trace) = if g.n() > LARGE_INPUT {
        std::thread::scope(|scope| {
            std::thread::Builder::new()
                .stack_size(LARGE_STACK)
                .spawn_scoped(scope, run)
                .expect("spawn construction thread")
                .join()
                .expect("construction thread panicked")
        })?
    } else {
        run()?
    };
    let bound = g.n() / (k + 1);
    if set.len() > bound || !is_isolating(g, k, &set) {
        return Err(Error::Construction(format!(
            "result {:?} fails verification (bound {bound})",
            set.to_vec()
        )));
    }
    Ok(BoundResult { set, bound, trace })
}

/// Runs the construction on each component; exceptional components get their
/// forced optimal sets (one vertex for `K_k`, two vertices at distance two for
/// `C_5` at `k = 2`).
pub fn theorem1_per_component(g: &Graph, k: usize) -> Result<Vec<ComponentOutcome>> {
    check_k(k)?;
    let mut out = Vec::new();
    for comp in g.components() {
        let sub = g.induced_unchecked(&comp);
        let outcome = match sub.graph.classify_exception(k)? {
            ExceptionKind::None => {
                let local = build_top(&sub.graph, k, &sub.labels)?;
                ComponentOutcome::Bound {
                    result: BoundResult {
                        set: sub.lift(&local.set),
                        bound: local.bound,
                        trace: local.trace,
                    },
                    component: comp,
                }
            }
            kind => {
                let first = comp.first().expect("components are nonempty");
                let mut set = VertexSet::singleton(g.n(), first);
                if kind == ExceptionKind::FiveCycleAtK2 {
                    let far = comp.difference(&g.closed_neighbors(first)).first().unwrap();
                    set.insert(far);
                }
                ComponentOutcome::Exceptional { component: comp, kind, set }
            }
        };
        out.push(outcome);
    }
    Ok(out)
}

struct Builder {
    k: usize,
    trace: Vec<TraceStep>,
    check_each: bool,
}

/// Residual components of `G - N[v]` with their exceptional flags and links.
struct Linkage {
    comps: Vec<VertexSet>,
    exceptional: Vec<bool>,
    links: Vec<VertexSet>,
}

impl Linkage {
    fn new(g: &Graph, k: usize, v: usize) -> Self {
        let rest = g.closed_neighbors(v).complement();
        let comps = g.components_within(&rest);
        let exceptional = comps.iter().map(|h| g.is_exceptional_within(h, k)).collect();
        let links = comps
            .iter()
            .map(|h| {
                let mut l = VertexSet::new(g.n());
                for x in g.neighbors(v) {
                    if g.neighbors(x).intersects(h) {
                        l.insert(x);
                    }
                }
                l
            })
            .collect();
        Linkage { comps, exceptional, links }
    }

    fn linked_only_to(&self, i: usize, x: usize) -> bool {
        self.links[i].len() == 1 && self.links[i].contains(x)
    }
}

fn members(labels: &[usize], s: &VertexSet) -> Vec<usize> {
    s.iter().map(|v| labels[v]).collect()
}

impl Builder {
    fn step(
        &mut self,
        branch: Branch,
        depth: usize,
        labels: &[usize],
        pivot: Option<usize>,
        link: Option<usize>,
        chosen: &[usize],
        terminal: Option<Terminal>,
    ) {
        self.trace.push(TraceStep {
            branch,
            depth,
            vertices: labels.to_vec(),
            pivot: pivot.map(|p| labels[p]),
            link: link.map(|x| labels[x]),
            chosen: chosen.iter().map(|&c| labels[c]).collect(),
            terminal,
        });
    }

    /// Construction on a connected non-exceptional `g`; result in `g`'s labels.
    fn build(&mut self, g: &Graph, labels: &[usize], depth: usize) -> Result<VertexSet> {
        let k = self.k;
        let n = g.n();
        let all = g.vertices();
        let set = if n <= 2 {
            // only K_2 at k = 1 has a clique here; the rest are exceptional or clique-free
            let set = match find_k_clique_within(g, k, &all) {
                Some(_) => VertexSet::singleton(n, 0),
                None => VertexSet::new(n),
            };
            self.step(Branch::BaseSmall, depth, labels, None, None, &set.to_vec(), None);
            set
        } else if let Some(clique) = find_k_clique_within(g, k, &all) {
            let v = clique
                .iter()
                .find(|&u| !g.closed_neighbors(u).is_subset(&clique))
                .ok_or_else(|| Error::Construction("clique with no outside neighbour".into()))?;
            if g.degree(v) + 1 == n {
                self.step(Branch::DominatingVertex, depth, labels, Some(v), None, &[v], None);
                VertexSet::singleton(n, v)
            } else {
                self.split(g, labels, depth, v)?
            }
        } else {
            self.step(Branch::NoClique, depth, labels, None, None, &[], None);
            VertexSet::new(n)
        };
        if self.check_each && (set.len() > n / (k + 1) || !is_isolating(g, k, &set)) {
            return Err(Error::Construction(format!(
                "step at depth {depth} on {:?} returned {:?}",
                labels,
                members(labels, &set)
            )));
        }
        Ok(set)
    }

    /// Recursive call on `G[part]`, lifted back to `g`'s labels.
    fn recurse(&mut self, g: &Graph, labels: &[usize], part: &VertexSet, depth: usize) -> Result<VertexSet> {
        let sub = g.induced_unchecked(part);
        if !sub.graph.is_connected() || sub.graph.classify_exception(self.k)? != ExceptionKind::None {
            return Err(Error::Construction(format!(
                "recursive input {:?} is disconnected or exceptional",
                members(labels, part)
            )));
        }
        let sub_labels: Vec<usize> = sub.labels.iter().map(|&i| labels[i]).collect();
        let local = self.build(&sub.graph, &sub_labels, depth + 1)?;
        Ok(sub.lift(&local))
    }

    fn split(&mut self, g: &Graph, labels: &[usize], depth: usize, v: usize) -> Result<VertexSet> {
        let link = Linkage::new(g, self.k, v);
        if !link.exceptional.iter().any(|&e| e) {
            self.step(Branch::NoExceptional, depth, labels, Some(v), None, &[v], None);
            let mut set = VertexSet::singleton(g.n(), v);
            for comp in &link.comps {
                set.union_with(&self.recurse(g, labels, comp, depth)?);
            }
            return Ok(set);
        }
        let lonely = (0..link.comps.len()).find(|&i| link.exceptional[i] && link.links[i].len() == 1);
        match lonely {
            Some(i) => {
                let x = link.links[i].first().unwrap();
                self.case_two(g, labels, depth, v, x, &link)
            }
            None => self.case_one(g, labels, depth, v, &link),
        }
    }

    /// Some exceptional component hangs off a single neighbour `x` of `v`.
    fn case_two(
        &mut self,
        g: &Graph,
        labels: &[usize],
        depth: usize,
        v: usize,
        x: usize,
        link: &Linkage,
    ) -> Result<VertexSet> {
        let n = g.n();
        let mut set = VertexSet::singleton(n, x);
        let mut x_side = VertexSet::singleton(n, x);
        let mut parts = Vec::new();
        for (i, comp) in link.comps.iter().enumerate() {
            if !link.linked_only_to(i, x) {
                continue;
            }
            if link.exceptional[i] {
                x_side.union_with(comp);
                if comp.len() == 5 && self.k == 2 {
                    // x covers y_H; the far vertex from y_H covers the rest but one
                    let y_h = comp.intersection(g.neighbors(x)).first().unwrap();
                    let far = comp.difference(&g.closed_neighbors(y_h)).first().unwrap();
                    set.insert(far);
                }
            } else {
                parts.push(comp.clone());
            }
        }
        let star = g.component_of(&x_side.complement(), v);
        if star.len() == self.k && g.is_complete_within(&star) {
            // x kills v, leaving k - 1 vertices
        } else if self.k == 2 && g.is_five_cycle_within(&star) {
            let far = star.difference(&g.closed_neighbors(v)).first().unwrap();
            set.insert(far);
        } else {
            parts.insert(0, star);
        }
        self.step(Branch::Case2, depth, labels, Some(v), Some(x), &set.to_vec(), None);
        for part in &parts {
            set.union_with(&self.recurse(g, labels, part, depth)?);
        }
        Ok(set)
    }

    /// Every exceptional component is linked to at least two neighbours of `v`.
    fn case_one(&mut self, g: &Graph, labels: &[usize], depth: usize, v: usize, link: &Linkage) -> Result<VertexSet> {
        let k = self.k;
        let n = g.n();
        let hp = link.exceptional.iter().position(|&e| e).unwrap();
        let h_prime = &link.comps[hp];
        let x = link.links[hp].first().unwrap();
        let only_x: Vec<&VertexSet> = (0..link.comps.len())
            .filter(|&i| link.linked_only_to(i, x))
            .map(|i| &link.comps[i])
            .collect();
        let y = h_prime.intersection(g.neighbors(x)).first().unwrap();
        let h_is_cycle = k == 2 && h_prime.len() == 5;
        let y_far = h_is_cycle.then(|| h_prime.difference(&g.closed_neighbors(y)).first().unwrap());

        let mut x_set = h_prime.clone();
        x_set.insert(x);
        let star = g.component_of(&x_set.complement(), v);

        if star.len() == k && g.is_complete_within(&star) {
            return self.case_one_clique_star(g, labels, depth, v, x, y, y_far, h_prime, &x_set, &star, &only_x);
        }
        if k == 2 && g.is_five_cycle_within(&star) {
            return self.case_one_cycle_star(g, labels, depth, v, x, y, &star);
        }

        let mut set = VertexSet::singleton(n, y);
        if let Some(f) = y_far {
            set.insert(f);
        }
        self.step(Branch::Case1Sub1, depth, labels, Some(v), Some(x), &set.to_vec(), None);
        set.union_with(&self.recurse(g, labels, &star, depth)?);
        for part in only_x {
            set.union_with(&self.recurse(g, labels, part, depth)?);
        }
        Ok(set)
    }

    #[allow(clippy::too_many_arguments)]
    fn case_one_clique_star(
        &mut self,
        g: &Graph,
        labels: &[usize],
        depth: usize,
        v: usize,
        x: usize,
        y: usize,
        y_far: Option<usize>,
        h_prime: &VertexSet,
        x_set: &VertexSet,
        star: &VertexSet,
        only_x: &[&VertexSet],
    ) -> Result<VertexSet> {
        let k = self.k;
        let n = g.n();
        // vertices of H' already covered by D'', and D'' itself
        let (covered_h, mut set) = match y_far {
            None => (VertexSet::singleton(n, y), VertexSet::singleton(n, x)),
            Some(f) => {
                let mut c = g.neighbors(f).intersection(h_prime);
                c.insert(y);
                c.insert(f);
                let mut d = VertexSet::singleton(n, x);
                d.insert(f);
                (c, d)
            }
        };
        let mut removed = covered_h;
        removed.insert(v);
        removed.insert(x);
        let leftover = x_set.union(star).difference(&removed);

        let Some(c_y) = find_k_clique_within(g, k, &leftover) else {
            let t = Some(Terminal::CliqueFreeRemainder);
            self.step(Branch::Case1Sub2, depth, labels, Some(v), Some(x), &set.to_vec(), t);
            for part in only_x {
                set.union_with(&self.recurse(g, labels, part, depth)?);
            }
            return Ok(set);
        };

        let z = c_y
            .intersection(star)
            .first()
            .ok_or_else(|| Error::Construction("clique C_Y misses G*_v".into()))?;
        let z_set = star.union(&c_y);
        let (terminal, set) = if !only_x.is_empty() {
            let t = Some(Terminal::RecurseOutsideZ);
            self.step(Branch::Case1Sub2, depth, labels, Some(v), Some(x), &[z], t);
            let mut set = VertexSet::singleton(n, z);
            set.union_with(&self.recurse(g, labels, &z_set.complement(), depth)?);
            return Ok(set);
        } else if y_far.is_none() {
            if z_set.len() >= k + 2 {
                (Terminal::SingleZ, VertexSet::singleton(n, z))
            } else {
                let z_prime = c_y
                    .intersection(h_prime)
                    .first()
                    .ok_or_else(|| Error::Construction("clique C_Y misses H'".into()))?;
                if k >= 3 {
                    (Terminal::SingleZPrime, VertexSet::singleton(n, z_prime))
                } else {
                    let w = (0..n)
                        .find(|&w| g.degree(w) >= 3)
                        .ok_or_else(|| Error::Construction("five-vertex case is a 5-cycle".into()))?;
                    (Terminal::HighDegreeVertex, VertexSet::singleton(n, w))
                }
            }
        } else {
            let z_prime = c_y
                .intersection(h_prime)
                .first()
                .ok_or_else(|| Error::Construction("clique C_Y misses H'".into()))?;
            let mut s = VertexSet::singleton(n, y);
            s.insert(z_prime);
            (Terminal::PairYZPrime, s)
        };
        self.step(Branch::Case1Sub2, depth, labels, Some(v), Some(x), &set.to_vec(), Some(terminal));
        Ok(set)
    }

    /// `k = 2` and `G*_v` is a 5-cycle `v v1 v2 v3 v4`.
    #[allow(clippy::too_many_arguments)]
    fn case_one_cycle_star(
        &mut self,
        g: &Graph,
        labels: &[usize],
        depth: usize,
        v: usize,
        x: usize,
        y: usize,
        star: &VertexSet,
    ) -> Result<VertexSet> {
        let n = g.n();
        let next = |from: usize, prev: usize| {
            let mut s = g.neighbors(from).intersection(star);
            s.remove(prev);
            s.first().unwrap()
        };
        let v1 = g.neighbors(v).intersection(star).first().unwrap();
        let v2 = next(v1, v);
        let v3 = next(v2, v1);
        let v4 = next(v3, v2);
        let y_set = VertexSet::from_vertices(n, [v2, v3, v4])?;
        let rest = y_set.complement();
        if !g.is_five_cycle_within(&rest) {
            let t = Some(Terminal::RecurseWithoutY);
            self.step(Branch::Case1Sub3, depth, labels, Some(v), Some(x), &[v3], t);
            let mut set = VertexSet::singleton(n, v3);
            set.union_with(&self.recurse(g, labels, &rest, depth)?);
            return Ok(set);
        }
        let partner = if g.has_edge(v3, y) { v3 } else { v1 };
        let set = VertexSet::from_vertices(n, [v, partner])?;
        let t = Some(Terminal::FiveCycleRemainder);
        self.step(Branch::Case1Sub3, depth, labels, Some(v), Some(x), &set.to_vec(), t);
        Ok(set)
    }
}

/// Whether `h` (a component of some residual of `g`) has a neighbour of `x`.
pub fn linked_to(g: &Graph, h: &VertexSet, x: usize) -> Result<bool> {
    if x >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: x, n: g.n() });
    }
    if h.contains(x) {
        return Err(Error::InvalidParameter(format!("vertex {x} lies inside the component")));
    }
    Ok(g.neighbors(x).intersects(&h.with_universe(g.n())))
}

/// Classification of the components of `G - N[v]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkageTable {
    pub pivot: usize,
    pub components: Vec<VertexSet>,
    /// Copies of `K_k`, or `C_5` at `k = 2`.
    pub exceptional: Vec<bool>,
    /// Neighbours of the pivot each component is linked to.
    pub links: Vec<VertexSet>,
}

impl LinkageTable {
    /// Indices of exceptional components.
    pub fn exceptional_family(&self) -> Vec<usize> {
        (0..self.components.len()).filter(|&i| self.exceptional[i]).collect()
    }

    /// Indices of components linked to `x` and nothing else.
    pub fn linked_only_to(&self, x: usize) -> Vec<usize> {
        (0..self.components.len())
            .filter(|&i| self.links[i].len() == 1 && self.links[i].contains(x))
            .collect()
    }

    /// True when some exceptional component is linked to exactly one neighbour.
    pub fn is_case_two(&self) -> bool {
        self.exceptional_family().into_iter().any(|i| self.links[i].len() == 1)
    }
}

pub fn build_linkage(g: &Graph, k: usize, v: usize) -> Result<LinkageTable> {
    check_k(k)?;
    if v >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    if g.degree(v) + 1 == g.n() {
        return Err(Error::InvalidParameter(format!("vertex {v} dominates the graph")));
    }
    let link = Linkage::new(g, k, v);
    Ok(LinkageTable {
        pivot: v,
        components: link.comps,
        exceptional: link.exceptional,
        links: link.links,
    })
}
