//! k-independent sets, the k-independence number, and the first-moment
//! quantities that bound it in `G(n, p)`.

mod kindep;
mod moments;

pub use kindep::{
    alpha_k_cover_bound, alpha_k_exact, greedy_k_independent, greedy_k_independent_by_degree, is_k_independent,
    AlphaResult, KIndependentWitness, DEFAULT_BUDGET,
};
pub use moments::{
    alpha_k_predicted_band, binomial_tail_upper, exact_binomial_cdf, first_moment_xs,
    ln_binomial, ln_binomial_cdf, FirstMomentInput,
};
