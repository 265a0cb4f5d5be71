//! The graphs B(n,k) reach iota = floor(n/(k+1)).
//!
//!     cargo run --example extremal_family

use clique_isolation::generators::{build_extremal, ExtremalParams};
use clique_isolation::iota_solve;

fn main() -> clique_isolation::Result<()> {
    println!("{:>3} {:>2} {:>3} {:>3} {:>5} {:>5}", "n", "k", "a", "b", "iota", "floor");
    for k in 1..=4 {
        for n in (k + 1..=20).step_by(k) {
            let p = ExtremalParams::new(n, k)?;
            let iota = iota_solve(&build_extremal(n, k)?, k)?.iota;
            println!("{n:>3} {k:>2} {:>3} {:>3} {iota:>5} {:>5}", p.a, p.b, n / (k + 1));
            assert_eq!(iota, n / (k + 1));
        }
    }
    Ok(())
}
