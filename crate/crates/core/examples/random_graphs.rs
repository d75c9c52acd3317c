//! Sampling G(n, p), building circulant regular graphs and the edge-list
//! format.
//!
//! cargo run --example random_graphs

use starsat::graph::{regular_circulant, Graph};
use starsat::io::{host_hash, parse_edge_list, to_edge_list_string};
use starsat::rng::{derive_seed, sample_gnp, RngSeed, RNG_ID};

fn main() -> starsat::error::Result<()> {
    let seed = derive_seed(42, &[1]);
    let g = sample_gnp(12, 0.5, RngSeed::new(seed))?;
    println!("G(12, 0.5) with seed {seed} ({RNG_ID}): {} edges", g.m());
    println!("degrees: {:?}", (0..g.n()).map(|v| g.degree(v)).collect::<Vec<_>>());

    let text = to_edge_list_string(&g);
    let back = parse_edge_list(&text)?;
    assert_eq!(back, g);
    println!("edge list round trip ok, host hash {:016x}", host_hash(&g));

    let c = regular_circulant(10, 3)?;
    println!("3-regular circulant on 10 vertices: {} edges", c.m());
    match regular_circulant(7, 3) {
        Ok(_) => unreachable!(),
        Err(e) => println!("circulant(7, 3): {e}"),
    }

    let sub = Graph::petersen().induced_subgraph(&[0, 1, 2, 3, 4])?;
    println!("outer ring of the Petersen graph: {:?}", sub.graph.edges().collect::<Vec<_>>());
    Ok(())
}
