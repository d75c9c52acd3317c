//! Greedy and exact k-independent sets, and the first-moment window for
//! alpha_k of a random graph.
//!
//! cargo run --release --example k_independence

use starsat::independence::{
    alpha_k_cover_bound, alpha_k_exact, alpha_k_predicted_band, greedy_k_independent_by_degree, is_k_independent,
    DEFAULT_BUDGET,
};
use starsat::params::ProbParams;
use starsat::rng::{sample_gnp, RngSeed};

fn main() -> starsat::error::Result<()> {
    let n = 120;
    let params = ProbParams::new(0.5)?;
    let g = sample_gnp(n, params.p(), RngSeed::new(7))?;
    for k in 0..3 {
        let greedy = greedy_k_independent_by_degree(&g, k);
        let exact = alpha_k_exact(&g, k, DEFAULT_BUDGET);
        assert!(is_k_independent(&g, &exact.witness.vertices, k)?);
        let (lo, hi) = alpha_k_predicted_band(n as u64, &params, k as u64)?;
        println!(
            "k={k}: greedy {:>2}  exact {:>2} ({} nodes)  cover bound {:>2}  window [{lo:.2}, {hi:.2}]",
            greedy.size(),
            exact.witness.size(),
            exact.expansions,
            alpha_k_cover_bound(&g, k),
        );
    }
    Ok(())
}
