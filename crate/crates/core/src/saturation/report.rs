use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use super::certificate::SaturationCertificate;
use super::construct::{construct_upper, IsMethod};
use super::exact::sat_exact;
use super::lower::{sat_lower_bound, AlphaSource};
use crate::error::Result;
use crate::graph::Graph;

/// Lower, constructive upper and (optionally) exact star-saturation values
/// for one host graph.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BoundsReport {
    pub r: usize,
    pub lower: Ratio<u64>,
    pub lower_ceiled: u64,
    /// Whether `lower` used the exact `alpha_{r-2}`.
    pub lower_certified: bool,
    pub upper: usize,
    pub exact: Option<usize>,
    pub ell_used: usize,
    pub certificate: Option<SaturationCertificate>,
    pub independent_set: Option<Vec<usize>>,
}

/// Collects [`sat_lower_bound`], [`construct_upper`] and, when `with_exact`
/// is set and the search finishes within `budget`, [`sat_exact`].
pub fn bounds_report(
    g: &Graph,
    r: usize,
    method: IsMethod,
    with_exact: bool,
    budget: u64,
) -> Result<BoundsReport> {
    let source = match method {
        IsMethod::Exact => AlphaSource::Exact,
        IsMethod::Greedy => AlphaSource::GreedyUpper,
    };
    let lower = sat_lower_bound(g, r, source, budget)?;
    let upper = construct_upper(g, r, method, budget)?;
    let exact = if with_exact {
        let res = sat_exact(g, r, budget)?;
        res.exact.then_some(res.value)
    } else {
        None
    };
    Ok(BoundsReport {
        r,
        lower: lower.value,
        lower_ceiled: lower.ceiled,
        lower_certified: lower.certified,
        upper: upper.upper,
        exact,
        ell_used: upper.ell_used,
        independent_set: upper.via_factor.then(|| upper.independent_set.clone()),
        certificate: Some(upper.certificate),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::independence::DEFAULT_BUDGET;

    #[test]
    fn report_is_sandwiched() {
        let p = Graph::petersen();
        for r in 2..5 {
            let rep = bounds_report(&p, r, IsMethod::Exact, true, DEFAULT_BUDGET).unwrap();
            let exact = rep.exact.unwrap() as u64;
            assert!(rep.lower_ceiled <= exact && exact <= rep.upper as u64);
        }
    }
}
