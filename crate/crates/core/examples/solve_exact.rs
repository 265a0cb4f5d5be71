//! Exact iota(G, k) for a few small graphs, branch-and-bound against the
//! exhaustive reference.
//!
//!     cargo run --example solve_exact

use clique_isolation::generators::{build_cycle, build_extremal, gen_random_connected};
use clique_isolation::{iota_oracle, iota_solve, Graph};

fn main() -> clique_isolation::Result<()> {
    let graphs: Vec<(&str, Graph)> = vec![
        ("C5", build_cycle(5)?),
        ("C9", build_cycle(9)?),
        ("B(13,3)", build_extremal(13, 3)?),
        ("random n=16 p=0.45", gen_random_connected(16, 0.45, 1)?),
    ];
    for (name, g) in &graphs {
        for k in 1..=4 {
            let fast = iota_solve(g, k)?;
            let slow = iota_oracle(g, k)?;
            assert_eq!(fast.iota, slow.iota);
            println!(
                "{name:<20} k={k} iota={} set={:?} nodes={} (oracle tried {})",
                fast.iota,
                fast.optimal_set.to_vec(),
                fast.nodes_expanded,
                slow.nodes_expanded
            );
        }
    }
    Ok(())
}
