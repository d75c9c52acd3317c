use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::params::ProbParams;

fn choose2(x: u64) -> u64 {
    x * x.saturating_sub(1) / 2
}

/// `sat(n, K_{1,r})` (Kászonyi and Tuza).
///
/// `C(r,2) + C(n-r,2)` when `r + 1 <= n <= 3r/2`, otherwise
/// `ceil((r-1)n/2 - r^2/8)`.
pub fn classical_sat_star(n: u64, r: u64) -> Result<u64> {
    if r < 2 || n <= r {
        return Err(Error::Domain(format!("need r >= 2 and n > r, got n={n}, r={r}")));
    }
    if 2 * n <= 3 * r {
        Ok(choose2(r) + choose2(n - r))
    } else {
        // ceil((4(r-1)n - r^2) / 8); the numerator is positive here
        let num = 4 * (r - 1) * n - r * r;
        Ok(num.div_ceil(8))
    }
}

/// `sat(n, K_r) = (r-2)n - C(r-1, 2)` (Erdős, Hajnal and Moon).
pub fn classical_sat_clique(n: u64, r: u64) -> Result<u64> {
    if r < 2 || n < r {
        return Err(Error::Domain(format!("need n >= r >= 2, got n={n}, r={r}")));
    }
    Ok((r - 2) * n - choose2(r - 1))
}

/// Predicted ranges for `sat(G(n,p), K_{1,r})`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReferenceBands {
    /// `(r-1)n/2 - (1 ± eps)(r-1) log_b n`, low end first.
    pub main: (f64, f64),
    /// For `r = 2`: `(n/2 - log_b(np), n/2 - log_b sqrt(n))` (Zito).
    pub zito: Option<(f64, f64)>,
}

pub fn reference_bands(n: u64, params: &ProbParams, r: u64, eps: f64) -> Result<ReferenceBands> {
    if n < 2 || r < 2 {
        return Err(Error::Domain(format!("need n >= 2 and r >= 2, got n={n}, r={r}")));
    }
    if !(0.0..1.0).contains(&eps) {
        return Err(Error::Domain(format!("epsilon must lie in [0, 1), got {eps}")));
    }
    let nf = n as f64;
    let center = (r - 1) as f64 * nf / 2.0;
    let shift = (r - 1) as f64 * params.log_b(nf);
    let main = (center - (1.0 + eps) * shift, center - (1.0 - eps) * shift);
    let zito = (r == 2).then(|| {
        (
            nf / 2.0 - params.log_b(nf * params.p()),
            nf / 2.0 - params.log_b(nf.sqrt()),
        )
    });
    Ok(ReferenceBands { main, zito })
}
