use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use super::certificate::check_r;
use crate::error::Result;
use crate::graph::Graph;
use crate::independence::{alpha_k_cover_bound, alpha_k_exact, greedy_k_independent_by_degree};

/// How `alpha_{r-2}` is obtained for [`sat_lower_bound`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AlphaSource {
    /// Branch and bound; falls back to the cover bound if the budget runs out.
    Exact,
    /// The clique-cover upper bound on `alpha_{r-2}`.
    GreedyUpper,
}

/// The lower bound `(r-1)(n - a)/2` on `sat(G, K_{1,r})`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LowerBound {
    pub value: Ratio<u64>,
    pub ceiled: u64,
    /// The value of `a` used; always at least `alpha_{r-2}(G)`.
    pub alpha_used: usize,
    /// True when `alpha_used` is known to equal `alpha_{r-2}(G)`.
    pub certified: bool,
}

pub(crate) fn lemma_bound(n: usize, r: usize, a: usize) -> Ratio<u64> {
    Ratio::new(((r - 1) * (n - a)) as u64, 2)
}

/// Lower bound on the star-saturation number from `alpha_{r-2}`.
///
/// In a saturated `H`, the vertices of `H`-degree below `r - 1` induce an
/// `(r-2)`-independent set of `G`; all others have degree `r - 1`.
/// Any upper bound on `alpha_{r-2}` therefore gives a valid bound, and the
/// result is `certified` exactly when the value used is the true `alpha`.
pub fn sat_lower_bound(g: &Graph, r: usize, source: AlphaSource, budget: u64) -> Result<LowerBound> {
    check_r(r)?;
    let k = r - 2;
    let (alpha_used, certified) = match source {
        AlphaSource::Exact => {
            let res = alpha_k_exact(g, k, budget);
            if res.exact {
                (res.witness.size(), true)
            } else {
                log::info!("alpha_{k} budget exhausted; using the cover bound");
                let cover = alpha_k_cover_bound(g, k);
                (cover, cover == res.witness.size())
            }
        }
        AlphaSource::GreedyUpper => {
            let cover = alpha_k_cover_bound(g, k);
            let lower = greedy_k_independent_by_degree(g, k).size();
            (cover, cover == lower)
        }
    };
    let value = lemma_bound(g.n(), r, alpha_used);
    Ok(LowerBound {
        ceiled: value.ceil().to_integer(),
        value,
        alpha_used,
        certified,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::independence::DEFAULT_BUDGET;

    #[test]
    fn lower_bound_examples() {
        let lb = sat_lower_bound(&Graph::complete(4), 2, AlphaSource::Exact, DEFAULT_BUDGET).unwrap();
        assert_eq!(lb.value, Ratio::new(3, 2));
        assert_eq!(lb.ceiled, 2);
        assert!(lb.certified);

        for r in 2..6 {
            let lb = sat_lower_bound(&Graph::empty(7), r, AlphaSource::Exact, DEFAULT_BUDGET).unwrap();
            assert_eq!(lb.value, Ratio::from_integer(0));
        }

        let c5 = Graph::cycle(5).unwrap();
        let lb = sat_lower_bound(&c5, 3, AlphaSource::Exact, DEFAULT_BUDGET).unwrap();
        assert_eq!(lb.value, Ratio::from_integer(2));
        assert!(sat_lower_bound(&c5, 1, AlphaSource::Exact, DEFAULT_BUDGET).is_err());
    }

    #[test]
    fn greedy_upper_never_exceeds_exact() {
        let g = Graph::petersen();
        for r in 2..5 {
            let exact = sat_lower_bound(&g, r, AlphaSource::Exact, DEFAULT_BUDGET).unwrap();
            let cover = sat_lower_bound(&g, r, AlphaSource::GreedyUpper, DEFAULT_BUDGET).unwrap();
            assert!(cover.value <= exact.value);
        }
    }
}
