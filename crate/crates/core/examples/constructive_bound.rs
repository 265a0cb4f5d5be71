//! Builds a set within floor(n/(k+1)) and prints the branch trace, then a
//! histogram of which rules fire over a batch of random graphs.
//!
//!     cargo run --example constructive_bound

use std::collections::BTreeMap;

use clique_isolation::generators::gen_random_connected;
use clique_isolation::{iota_solve, theorem1_set, verify_isolating, ExceptionKind, Graph};

fn main() -> clique_isolation::Result<()> {
    // two triangles hanging off a path
    let g = Graph::from_edges(8, [(0, 1), (1, 2), (2, 3), (0, 4), (0, 5), (4, 5), (3, 6), (3, 7), (6, 7)])?;
    let r = theorem1_set(&g, 3)?;
    println!("set {:?}, bound {}", r.set.to_vec(), r.bound);
    for step in &r.trace {
        println!(
            "{:indent$}{:?} on {:?} pivot={:?} link={:?} chose {:?} {}",
            "",
            step.branch,
            step.vertices,
            step.pivot,
            step.link,
            step.chosen,
            step.terminal.map(|t| format!("{t:?}")).unwrap_or_default(),
            indent = 2 * step.depth
        );
    }
    assert!(verify_isolating(&g, 3, &r.set)?.valid);

    let mut hist: BTreeMap<String, usize> = BTreeMap::new();
    let mut slack = 0;
    for seed in 0..400 {
        let g = gen_random_connected(8 + (seed % 9) as usize, 0.5, seed)?;
        for k in 2..=3 {
            if g.classify_exception(k)? != ExceptionKind::None {
                continue;
            }
            let r = theorem1_set(&g, k)?;
            slack += r.set.len() - iota_solve(&g, k)?.iota;
            for step in r.trace {
                *hist.entry(format!("{:?}", step.branch)).or_default() += 1;
            }
        }
    }
    println!("\nbranch counts over 800 instances (total slack over optimum: {slack})");
    for (branch, count) in hist {
        println!("  {branch:<16} {count}");
    }
    Ok(())
}
