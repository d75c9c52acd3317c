//! Lower bound, factor-based construction and greedy construction of a
//! K_{1,r}-saturated subgraph of G(n, p), with certificate checking.
//!
//! cargo run --release --example saturation_bounds

use starsat::independence::DEFAULT_BUDGET;
use starsat::params::ProbParams;
use starsat::rng::{sample_gnp, RngSeed};
use starsat::saturation::{
    check_certificate, construct_upper, greedy_saturated_lex, reference_bands, sat_lower_bound, AlphaSource,
    IsMethod,
};

fn main() -> starsat::error::Result<()> {
    let n = 300;
    let params = ProbParams::new(0.5)?;
    let g = sample_gnp(n, params.p(), RngSeed::new(3))?;
    for r in 2..=4 {
        let lower = sat_lower_bound(&g, r, AlphaSource::Exact, DEFAULT_BUDGET)?;
        let built = construct_upper(&g, r, IsMethod::Exact, DEFAULT_BUDGET)?;
        let greedy = greedy_saturated_lex(&g, r)?;
        let band = reference_bands(n as u64, &params, r as u64, 0.1)?;
        println!(
            "r={r}: {} <= sat <= {} (S: {} -> {}), greedy {}, band [{:.1}, {:.1}]",
            lower.value,
            built.upper,
            built.ell_initial,
            built.ell_used,
            greedy.num_edges(),
            band.main.0,
            band.main.1
        );
        assert!(check_certificate(&built.certificate.edges, &g, r)?.is_valid());
    }

    // a broken certificate names the edge that could still be added
    let mut cert = construct_upper(&g, 2, IsMethod::Greedy, DEFAULT_BUDGET)?.certificate;
    let removed = cert.edges.pop().expect("nonempty");
    let verdict = check_certificate(&cert.edges, &g, 2)?;
    println!("after removing {removed:?}: {} at {:?}", verdict.verdict, verdict.offending_edge);
    Ok(())
}
