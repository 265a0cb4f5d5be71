//! k-clique detection and enumeration.
//!
//!     cargo run --example clique_search

use clique_isolation::generators::gen_random_connected;
use clique_isolation::{enumerate_k_cliques, find_k_clique, CliqueQuery};

fn main() -> clique_isolation::Result<()> {
    let g = gen_random_connected(30, 0.5, 8)?;
    println!("n={} m={}", g.n(), g.edge_count());
    for k in 1..=8 {
        let first = find_k_clique(&g, k)?.map(|c| c.to_vec());
        let count = enumerate_k_cliques(&g, &CliqueQuery::new(k))?.len();
        println!("k={k}: {count} cliques, first {first:?}");
    }
    let some = enumerate_k_cliques(&g, &CliqueQuery::with_limit(4, 3))?;
    println!("first three 4-cliques: {:?}", some.iter().map(|c| c.to_vec()).collect::<Vec<_>>());
    Ok(())
}
