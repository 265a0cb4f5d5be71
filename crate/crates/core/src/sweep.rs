//! Bulk checking of the `floor(n / (k + 1))` bound over generated graphs.
//!
//! For every connected graph and every `k` up to `k_max`, a non-exceptional
//! instance must have `iota <= floor(n / (k + 1))` and the constructive set must
//! verify within the same bound. Exceptional instances must take their known
//! values (1 for `K_k`, 2 for `C_5` at `k = 2`). Work fans out across threads;
//! results are reduced in input order.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::constructive::theorem1_set;
use crate::edgelist::write_edge_list;
use crate::error::{Error, Result};
use crate::generators::{gen_random_connected, EnumerationCursor, DEFAULT_ENUMERATION_CAP};
use crate::graph::{ExceptionKind, Graph};
use crate::isolation::{iota_oracle_with_cap, iota_solve, is_isolating, DEFAULT_ORACLE_CAP};

const CHUNK: u64 = 1 << 14;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SweepMode {
    /// Every labeled connected graph with `1 <= n <= n_max`, exact values from
    /// the exhaustive oracle.
    Exhaustive { n_max: usize },
    /// `count` seeded random connected graphs with `n_min <= n <= n_max`,
    /// exact values from the branch-and-bound solver.
    Random { count: usize, n_min: usize, n_max: usize, seed: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepConfig {
    pub mode: SweepMode,
    pub k_max: usize,
    pub oracle_cap: usize,
    pub enumeration_cap: usize,
}

impl SweepConfig {
    pub fn new(mode: SweepMode, k_max: usize) -> Self {
        SweepConfig {
            mode,
            k_max,
            oracle_cap: DEFAULT_ORACLE_CAP,
            enumeration_cap: DEFAULT_ENUMERATION_CAP,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub graphs: u64,
    pub instances: u64,
    pub exceptional: u64,
    pub violations: u64,
    /// Instances where `iota` met the bound with equality.
    pub tight: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub n: usize,
    pub k: usize,
    pub reason: String,
    /// The offending graph in edge-list form.
    pub graph: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InstanceOutcome {
    Exceptional(ExceptionKind),
    Within { iota: usize, constructed: usize, bound: usize },
    Violation(String),
}

/// Checks one connected graph at one `k`; `exact` computes `iota`.
pub fn check_instance<F>(g: &Graph, k: usize, exact: F) -> Result<InstanceOutcome>
where
    F: Fn(&Graph, usize) -> Result<usize>,
{
    let bound = g.n() / (k + 1);
    let kind = g.classify_exception(k)?;
    let iota = exact(g, k)?;
    if kind != ExceptionKind::None {
        let expected = if kind == ExceptionKind::KClique { 1 } else { 2 };
        return Ok(if iota == expected {
            InstanceOutcome::Exceptional(kind)
        } else {
            InstanceOutcome::Violation(format!("exceptional graph ({kind}) has iota {iota}, expected {expected}"))
        });
    }
    if iota > bound {
        return Ok(InstanceOutcome::Violation(format!("iota {iota} exceeds floor(n/(k+1)) = {bound}")));
    }
    let built = match theorem1_set(g, k) {
        Ok(r) => r,
        Err(e) => return Ok(InstanceOutcome::Violation(format!("construction failed: {e}"))),
    };
    if built.set.len() > bound || !is_isolating(g, k, &built.set) {
        return Ok(InstanceOutcome::Violation(format!(
            "constructed set {:?} is invalid or exceeds {bound}",
            built.set.to_vec()
        )));
    }
    Ok(InstanceOutcome::Within { iota, constructed: built.set.len(), bound })
}

#[derive(Default)]
struct Partial {
    summary: SweepSummary,
    violations: Vec<Violation>,
}

impl Partial {
    fn absorb(&mut self, other: Partial) {
        let s = &mut self.summary;
        s.graphs += other.summary.graphs;
        s.instances += other.summary.instances;
        s.exceptional += other.summary.exceptional;
        s.violations += other.summary.violations;
        s.tight += other.summary.tight;
        self.violations.extend(other.violations);
    }

    fn check_graph<F>(&mut self, g: &Graph, k_max: usize, exact: &F) -> Result<()>
    where
        F: Fn(&Graph, usize) -> Result<usize>,
    {
        self.summary.graphs += 1;
        for k in 1..=k_max {
            self.summary.instances += 1;
            match check_instance(g, k, exact)? {
                InstanceOutcome::Exceptional(_) => self.summary.exceptional += 1,
                InstanceOutcome::Within { iota, bound, .. } => {
                    if iota == bound {
                        self.summary.tight += 1;
                    }
                }
                InstanceOutcome::Violation(reason) => {
                    self.summary.violations += 1;
                    self.violations.push(Violation {
                        n: g.n(),
                        k,
                        reason,
                        graph: write_edge_list(g),
                    });
                }
            }
        }
        Ok(())
    }
}

/// The `(n, p, graph seed)` triples a random sweep draws from `seed`.
pub fn random_specs(count: usize, n_min: usize, n_max: usize, seed: u64) -> Vec<(usize, f64, u64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(n_min..=n_max);
            let p = rng.gen_range(0.05..0.95);
            (n, p, rng.gen::<u64>())
        })
        .collect()
}

pub fn run_sweep(cfg: &SweepConfig) -> Result<(SweepSummary, Vec<Violation>)> {
    if cfg.k_max == 0 {
        return Err(Error::InvalidK(0));
    }
    let total = match cfg.mode {
        SweepMode::Exhaustive { n_max } => {
            if n_max > cfg.enumeration_cap.min(11) {
                return Err(Error::EnumerationCapExceeded { n: n_max, cap: cfg.enumeration_cap.min(11) });
            }
            if n_max > cfg.oracle_cap {
                return Err(Error::OracleCapExceeded { n: n_max, cap: cfg.oracle_cap });
            }
            let cap = cfg.oracle_cap;
            let exact = move |g: &Graph, k: usize| iota_oracle_with_cap(g, k, cap).map(|r| r.iota);
            let mut total = Partial::default();
            for n in 1..=n_max {
                let masks = EnumerationCursor::mask_count(n);
                let chunks: Vec<u64> = (0..masks.div_ceil(CHUNK)).collect();
                let parts = chunks
                    .into_par_iter()
                    .map(|c| {
                        let mut part = Partial::default();
                        for g in EnumerationCursor::range(n, c * CHUNK, (c + 1) * CHUNK, true) {
                            part.check_graph(&g, cfg.k_max, &exact)?;
                        }
                        Ok(part)
                    })
                    .collect::<Result<Vec<Partial>>>()?;
                for p in parts {
                    total.absorb(p);
                }
            }
            total
        }
        SweepMode::Random { count, n_min, n_max, seed } => {
            if n_min == 0 || n_min > n_max {
                return Err(Error::InvalidParameter(format!("need 1 <= n_min <= n_max (got {n_min}..{n_max})")));
            }
            let exact = |g: &Graph, k: usize| iota_solve(g, k).map(|r| r.iota);
            let parts = random_specs(count, n_min, n_max, seed)
                .into_par_iter()
                .map(|(n, p, s)| {
                    let mut part = Partial::default();
                    part.check_graph(&gen_random_connected(n, p, s)?, cfg.k_max, &exact)?;
                    Ok(part)
                })
                .collect::<Result<Vec<Partial>>>()?;
            let mut total = Partial::default();
            for p in parts {
                total.absorb(p);
            }
            total
        }
    };
    Ok((total.summary, total.violations))
}
