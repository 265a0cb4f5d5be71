//! Checks the bound on every labeled connected graph up to a size.
//!
//!     cargo run --release --example exhaustive_check -- 7

use clique_isolation::sweep::{run_sweep, SweepConfig, SweepMode};

fn main() -> clique_isolation::Result<()> {
    let n_max = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(6);
    let (summary, violations) = run_sweep(&SweepConfig::new(SweepMode::Exhaustive { n_max }, 3))?;
    println!(
        "n <= {n_max}: {} graphs, {} instances, {} exceptional, {} tight, {} violations",
        summary.graphs, summary.instances, summary.exceptional, summary.tight, summary.violations
    );
    for v in violations {
        println!("violation at n={} k={}: {}\n{}", v.n, v.k, v.reason, v.graph);
    }
    Ok(())
}
