//! Expected numbers of sparse vertex subsets and binomial tail bounds.
//!
//! cargo run --example first_moment

use starsat::experiments::first_moment_threshold;
use starsat::independence::{binomial_tail_upper, exact_binomial_cdf, first_moment_xs, FirstMomentInput};
use starsat::params::ProbParams;

fn main() -> starsat::error::Result<()> {
    let half = ProbParams::new(0.5)?;
    let x = first_moment_xs(&FirstMomentInput::new(12, half, 1, 4)?);
    println!("E[X_4] for n=12, k=1: {x:.4}");

    for n in [300u64, 1000, 10_000] {
        let s: Vec<u64> = (0..3).map(|k| first_moment_threshold(n, 0.5, k)).collect::<Result<_, _>>()?;
        println!("n={n}: least s with E[X_s] < 1 for k = 0, 1, 2: {s:?}");
    }

    println!(" s   P(Bin(20, .3) <= s)   C(20, s) .7^(20-s)");
    for s in [0u64, 2, 5, 10] {
        println!("{s:>2} {:>20.3e} {:>20.3e}", exact_binomial_cdf(20, s, 0.3)?, binomial_tail_upper(20, s, 0.3)?);
    }
    Ok(())
}
