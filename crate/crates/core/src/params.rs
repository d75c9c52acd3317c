use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Edge probability of `G(n, p)` together with `q = 1 - p` and the
/// logarithm base `b = 1/q` used by every asymptotic formula in the crate.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProbParams {
    p: f64,
    q: f64,
    b: f64,
}

impl ProbParams {
    /// Requires `0 < p < 1`; the endpoints leave `log_b` undefined.
    pub fn new(p: f64) -> Result<Self> {
        if !(p > 0.0 && p < 1.0) {
            return Err(Error::Domain(format!("edge probability must lie in (0, 1), got {p}")));
        }
        let q = 1.0 - p;
        Ok(ProbParams { p, q, b: 1.0 / q })
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn q(&self) -> f64 {
        self.q
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    /// `log_b x` with `b = 1/(1-p)`.
    pub fn log_b(&self, x: f64) -> f64 {
        x.ln() / self.b.ln()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_boundary() {
        assert!(ProbParams::new(0.0).is_err());
        assert!(ProbParams::new(1.0).is_err());
        assert!(ProbParams::new(f64::NAN).is_err());
    }

    #[test]
    fn half_gives_base_two() {
        let pp = ProbParams::new(0.5).unwrap();
        assert_eq!(pp.q(), 0.5);
        assert_eq!(pp.b(), 2.0);
        assert!((pp.log_b(1024.0) - 10.0).abs() < 1e-12);
    }
}
