//! Binomial tails and the first-moment count of sparse vertex subsets.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::params::ProbParams;

/// `ln C(n, k)`; `-inf` when `k > n`, exactly `0.0` at `k = 0` and `k = n`.
pub fn ln_binomial(n: u64, k: u64) -> f64 {
    if k > n {
        f64::NEG_INFINITY
    } else if k == 0 || k == n {
        0.0
    } else {
        statrs::function::factorial::ln_binomial(n, k)
    }
}

fn check_prob(p: f64) -> Result<()> {
    if p > 0.0 && p < 1.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!("success probability must lie in (0, 1), got {p}")))
    }
}

/// `ln P(Bin(trials, p) <= s)`, summing every term of the mass function in
/// log space with a compensated sum. Thresholds above `trials` give `0`.
pub fn ln_binomial_cdf(trials: u64, s: u64, p: f64) -> Result<f64> {
    check_prob(p)?;
    let s = s.min(trials);
    let (lp, lq) = (p.ln(), (1.0 - p).ln());
    let terms: Vec<f64> = (0..=s)
        .map(|i| ln_binomial(trials, i) + i as f64 * lp + (trials - i) as f64 * lq)
        .collect();
    let max = terms.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    // Neumaier summation of exp(t - max)
    let (mut sum, mut comp) = (0.0f64, 0.0f64);
    for &t in &terms {
        let x = (t - max).exp();
        let next = sum + x;
        if sum.abs() >= x.abs() {
            comp += (sum - next) + x;
        } else {
            comp += (x - next) + sum;
        }
        sum = next;
    }
    Ok((max + (sum + comp).ln()).min(0.0))
}

/// `P(Bin(trials, p) <= s)` evaluated from the full mass function.
pub fn exact_binomial_cdf(trials: u64, s: u64, p: f64) -> Result<f64> {
    Ok(ln_binomial_cdf(trials, s, p)?.exp())
}

/// Union-bound tail `C(n, s) (1-p)^(n-s)`, which dominates
/// `P(Bin(n, p) <= s)`. Evaluated in log space.
pub fn binomial_tail_upper(n: u64, s: u64, p: f64) -> Result<f64> {
    check_prob(p)?;
    if s > n {
        return Err(Error::Domain(format!("threshold {s} exceeds trials {n}")));
    }
    Ok((ln_binomial(n, s) + (n - s) as f64 * (1.0 - p).ln()).exp())
}

/// Parameters of the expected count `E[X_s]` of `s`-vertex subsets spanning
/// at most `floor(k s / 2)` edges.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct FirstMomentInput {
    pub n: u64,
    pub params: ProbParams,
    pub k: u64,
    pub s: u64,
}

impl FirstMomentInput {
    pub fn new(n: u64, params: ProbParams, k: u64, s: u64) -> Result<Self> {
        if s < 1 || s > n {
            return Err(Error::Domain(format!("subset size must satisfy 1 <= s <= n, got s={s} n={n}")));
        }
        Ok(FirstMomentInput { n, params, k, s })
    }

    /// Largest edge count an `s`-subset may span and still be counted.
    pub fn edge_threshold(&self) -> u64 {
        self.k * self.s / 2
    }
}

/// `E[X_s] = C(n, s) * P(Bin(C(s, 2), p) <= floor(k s / 2))`.
pub fn first_moment_xs(input: &FirstMomentInput) -> f64 {
    let pairs = input.s * (input.s - 1) / 2;
    let ln_cdf = ln_binomial_cdf(pairs, input.edge_threshold(), input.params.p())
        .expect("ProbParams guarantees 0 < p < 1");
    (ln_binomial(input.n, input.s) + ln_cdf).exp()
}

/// Window expected to contain `alpha_k(G(n, p))` at moderate `n`.
///
/// `hi = 2 log_b n + 2k log_b log_b n - 1` is the first-moment ceiling;
/// `lo = 2 log_b n - 2 log_b log_b n - 2` is a calibrated floor.
pub fn alpha_k_predicted_band(n: u64, params: &ProbParams, k: u64) -> Result<(f64, f64)> {
    let lb_n = params.log_b(n as f64);
    if n < 3 || lb_n <= 1.0 {
        return Err(Error::Domain(format!(
            "log_b log_b n undefined or non-positive for n={n}, p={}",
            params.p()
        )));
    }
    let lblb = params.log_b(lb_n);
    let hi = 2.0 * lb_n + 2.0 * k as f64 * lblb - 1.0;
    let lo = 2.0 * lb_n - 2.0 * lblb - 2.0;
    Ok((lo, hi))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pp(p: f64) -> ProbParams {
        ProbParams::new(p).unwrap()
    }

    // Oracle: direct product form of the binomial mass function.
    fn direct_cdf(n: u64, s: u64, p: f64) -> f64 {
        let mut c = 1.0f64;
        let mut total = 0.0;
        for i in 0..=s.min(n) {
            if i > 0 {
                c = c * (n - i + 1) as f64 / i as f64;
            }
            total += c * p.powi(i as i32) * (1.0 - p).powi((n - i) as i32);
        }
        total
    }

    #[test]
    fn tail_examples() {
        assert!((binomial_tail_upper(2, 0, 0.5).unwrap() - 0.25).abs() < 1e-15);
        assert!((exact_binomial_cdf(2, 0, 0.5).unwrap() - 0.25).abs() < 1e-15);
        let b = binomial_tail_upper(10, 2, 0.3).unwrap();
        assert!((b - 45.0 * 0.7f64.powi(8)).abs() < 1e-12);
        assert!((b - 2.5942).abs() < 1e-4);
        let c = exact_binomial_cdf(10, 2, 0.3).unwrap();
        assert!((c - 0.3828).abs() < 1e-4);
        for n in 0..20 {
            assert_eq!(binomial_tail_upper(n, n, 0.37).unwrap(), 1.0);
        }
        assert!(binomial_tail_upper(3, 4, 0.5).is_err());
        assert!(binomial_tail_upper(3, 1, 1.0).is_err());
    }

    #[test]
    fn cdf_matches_direct_form() {
        for n in 0..40u64 {
            for s in 0..=n {
                for p in [0.05, 0.3, 0.5, 0.9] {
                    let a = exact_binomial_cdf(n, s, p).unwrap();
                    let b = direct_cdf(n, s, p);
                    assert!((a - b).abs() <= 1e-12 * b.max(1e-300) + 1e-300, "n={n} s={s} p={p}");
                }
            }
        }
    }

    #[test]
    fn large_tail_stays_finite() {
        // C(100000, 10) / 2^10
        let v = binomial_tail_upper(100_000, 99_990, 0.5).unwrap();
        let direct: f64 = (0..10).map(|i| (100_000 - i) as f64 / (i + 1) as f64).product::<f64>() / 1024.0;
        assert!((v / direct - 1.0).abs() < 1e-9);
        assert!(exact_binomial_cdf(100_000, 49_000, 0.5).unwrap() < 1e-9);
    }

    #[test]
    fn first_moment_examples() {
        for k in 1..4 {
            let x = first_moment_xs(&FirstMomentInput::new(17, pp(0.3), k, 1).unwrap());
            assert!((x - 17.0).abs() < 1e-9);
        }
        let x = first_moment_xs(&FirstMomentInput::new(3, pp(0.5), 1, 3).unwrap());
        assert!((x - 0.5).abs() < 1e-12);
        let x = first_moment_xs(&FirstMomentInput::new(12, pp(0.5), 1, 4).unwrap());
        assert!((x - 495.0 * 22.0 / 64.0).abs() < 1e-9);
        assert!(FirstMomentInput::new(5, pp(0.5), 1, 0).is_err());
        assert!(FirstMomentInput::new(5, pp(0.5), 1, 6).is_err());
    }

    #[test]
    fn band_examples() {
        let (_, hi0) = alpha_k_predicted_band(500, &pp(0.5), 0).unwrap();
        assert!((hi0 - (2.0 * 500f64.log2() - 1.0)).abs() < 1e-12);
        assert!((hi0 - 16.93).abs() < 0.01);
        let (_, hi1) = alpha_k_predicted_band(500, &pp(0.5), 1).unwrap();
        assert!((hi1 - 23.26).abs() < 0.01);
        for n in [10u64, 100, 1000, 12345] {
            let lblb = 2.0 * (n as f64).log2().log2();
            let (_, a) = alpha_k_predicted_band(n, &pp(0.5), 2).unwrap();
            let (_, b) = alpha_k_predicted_band(n, &pp(0.5), 3).unwrap();
            assert!((b - a - lblb).abs() < 1e-9);
        }
        assert!(alpha_k_predicted_band(2, &pp(0.5), 0).is_err());
        assert!(alpha_k_predicted_band(8, &pp(0.9), 0).is_err());
    }
}
