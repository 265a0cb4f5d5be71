//! Minimum k-clique isolating sets.
//!
//! A set `D` of vertices *isolates* the k-cliques of a graph `G` when deleting
//! the closed neighbourhood `N[D]` leaves no k-clique behind. The smallest such
//! set has size `iota(G, k)`; at `k = 1` this is the domination number.
//!
//! The crate provides:
//!
//! * [`graph`]: a dense bitset graph with neighbourhood, deletion, induced
//!   subgraph and component operations;
//! * [`clique`]: deterministic k-clique detection and enumeration;
//! * [`isolation`]: certificate checking, an exhaustive reference solver and a
//!   branch-and-bound exact solver;
//! * [`constructive`]: a recursive construction that returns an isolating set
//!   of size at most `floor(n / (k + 1))` for every connected graph other than
//!   `K_k` and (at `k = 2`) the 5-cycle;
//! * [`generators`]: the extremal family `B(n, k)`, standard graphs, seeded
//!   random connected graphs and exhaustive labeled enumeration;
//! * [`edgelist`], [`report`] and [`cli`]: the text file format, run reports
//!   and the command-line front end.

pub mod cli;
pub mod clique;
pub mod constructive;
pub mod edgelist;
pub mod error;
pub mod generators;
pub mod graph;
pub mod isolation;
pub mod report;
pub mod sweep;

pub use clique::{enumerate_k_cliques, find_k_clique, has_k_clique, CliqueQuery};
pub use constructive::{theorem1_per_component, theorem1_set, BoundResult, Branch, ComponentOutcome};
pub use error::{Error, Result};
pub use graph::{ExceptionKind, Graph, Subgraph, VertexSet};
pub use isolation::{
    greedy_upper_bound, iota_oracle, iota_solve, verify_isolating, IsolationCertificate,
    SolveReport,
};
