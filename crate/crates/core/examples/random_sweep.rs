//! Greedy vs exact vs constructed set sizes on seeded random graphs.
//!
//!     cargo run --release --example random_sweep -- 40

use clique_isolation::generators::gen_random_connected;
use clique_isolation::sweep::random_specs;
use clique_isolation::{greedy_upper_bound, iota_solve, theorem1_set, ExceptionKind};

fn main() -> clique_isolation::Result<()> {
    let n_max = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(24);
    let k = 2;
    let (mut greedy_total, mut exact_total, mut built_total, mut floor_total) = (0, 0, 0, 0);
    for (n, p, seed) in random_specs(60, 6, n_max, 17) {
        let g = gen_random_connected(n, p, seed)?;
        if g.classify_exception(k)? != ExceptionKind::None {
            continue;
        }
        let greedy = greedy_upper_bound(&g, k)?.len();
        let exact = iota_solve(&g, k)?;
        let built = theorem1_set(&g, k)?.set.len();
        println!("n={n:>3} p={p:.2} greedy={greedy} exact={} built={built} floor={} nodes={}", exact.iota, n / 3, exact.nodes_expanded);
        greedy_total += greedy;
        exact_total += exact.iota;
        built_total += built;
        floor_total += n / 3;
    }
    println!("totals: greedy {greedy_total}, exact {exact_total}, constructed {built_total}, floor {floor_total}");
    Ok(())
}
