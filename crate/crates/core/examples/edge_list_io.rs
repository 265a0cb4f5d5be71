//! Writes a graph as an edge list, reads it back and verifies a set.
//!
//!     cargo run --example edge_list_io

use clique_isolation::edgelist::{parse_edge_list, read_edge_list, write_edge_list};
use clique_isolation::generators::build_extremal;
use clique_isolation::{verify_isolating, VertexSet};

fn main() -> clique_isolation::Result<()> {
    let g = build_extremal(7, 2)?;
    let text = write_edge_list(&g);
    print!("{text}");

    let path = std::env::temp_dir().join("clique_isolation_b72.txt");
    std::fs::write(&path, &text)?;
    let back = read_edge_list(&path)?;
    assert_eq!(back, g);

    let cert = verify_isolating(&back, 2, &VertexSet::from_vertices(7, [0, 1])?)?;
    println!("{{0, 1}} isolates: {}", cert.valid);
    let cert = verify_isolating(&back, 2, &VertexSet::from_vertices(7, [2])?)?;
    println!("{{2}} isolates: {} (witness {:?})", cert.valid, cert.witness.map(|w| w.to_vec()));

    match parse_edge_list("# comment\n3 2\n0 1\n1 1\n") {
        Ok(_) => unreachable!(),
        Err(e) => println!("rejected: {e}"),
    }
    let _ = std::fs::remove_file(path);
    Ok(())
}
