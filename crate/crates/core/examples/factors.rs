//! Maximum matchings and d-factors.
//!
//! cargo run --release --example factors

use starsat::factor::{d_factor, d_factor_bruteforce, max_matching};
use starsat::graph::Graph;
use starsat::rng::{sample_gnp, RngSeed};

fn main() -> starsat::error::Result<()> {
    let p = Graph::petersen();
    println!("Petersen: perfect matching {:?}", max_matching(&p));
    for d in 1..=3 {
        let f = d_factor(&p, d);
        println!("Petersen {d}-factor: {}", if f.found { "yes" } else { "no" });
        assert_eq!(f.found, d_factor_bruteforce(&p, d)?.found);
    }
    // 2-factors of the path do not exist; the cycle is its own.
    println!("P_5 2-factor: {}", d_factor(&Graph::path(5), 2).found);
    println!("C_5 2-factor: {}", d_factor(&Graph::cycle(5)?, 2).found);

    let g = sample_gnp(1000, 0.5, RngSeed::new(1))?;
    for d in [1, 2, 5] {
        let f = d_factor(&g, d);
        assert!(f.is_valid_for(&g));
        println!("G(1000, 0.5) {d}-factor: {} edges", f.edges.len());
    }
    Ok(())
}
