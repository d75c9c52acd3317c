//! Exact star-saturation numbers of small graphs against the classical
//! formula for K_n and against minimum maximal matchings.
//!
//! cargo run --release --example exact_saturation

use starsat::experiments::verify_small;
use starsat::graph::Graph;
use starsat::independence::DEFAULT_BUDGET;
use starsat::rng::{sample_gnp, RngSeed};
use starsat::saturation::{classical_sat_star, min_maximal_matching_bruteforce, sat_exact};

fn main() -> starsat::error::Result<()> {
    println!(" n  r  sat(K_n)  formula");
    for r in 2..=4usize {
        for n in r + 1..=9 {
            let res = sat_exact(&Graph::complete(n), r, DEFAULT_BUDGET)?;
            println!("{n:>2} {r:>2} {:>9} {:>8}", res.value, classical_sat_star(n as u64, r as u64)?);
        }
    }

    let g = sample_gnp(9, 0.4, RngSeed::new(5))?;
    let res = sat_exact(&g, 2, DEFAULT_BUDGET)?;
    println!(
        "G(9, 0.4): sat = {}, smallest maximal matching = {}",
        res.value,
        min_maximal_matching_bruteforce(&g)?
    );
    println!("witness: {}", res.certificate.to_json()?);

    let report = verify_small(7, &[2, 3], 100, 11)?;
    println!("cross-checked {} graphs: {} violations", report.graphs, report.violations.len());
    Ok(())
}
