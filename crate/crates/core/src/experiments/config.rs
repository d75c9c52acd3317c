use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::independence::DEFAULT_BUDGET;
use crate::saturation::EXACT_MAX_N;

/// A quantity measured in every trial of a grid.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Method {
    /// `(r-1)(n - alpha_{r-2})/2` with exact `alpha`.
    #[serde(rename = "lower")]
    Lower,
    /// `construct_upper` with a greedy independent set.
    #[serde(rename = "upper-greedy")]
    UpperGreedy,
    /// `construct_upper` with a maximum independent set.
    #[serde(rename = "upper-exact-alpha")]
    UpperExactAlpha,
    /// `sat_exact`.
    #[serde(rename = "exact")]
    Exact,
    /// `alpha_{r-2}` by branch and bound.
    #[serde(rename = "alpha_k")]
    AlphaK,
    /// Least `s` with `E[X_s] < 1` for `k = r - 2`; does not depend on the
    /// sampled graph.
    #[serde(rename = "first-moment")]
    FirstMoment,
}

impl Method {
    pub const ALL: [Method; 6] = [
        Method::Lower,
        Method::UpperGreedy,
        Method::UpperExactAlpha,
        Method::Exact,
        Method::AlphaK,
        Method::FirstMoment,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Lower => "lower",
            Method::UpperGreedy => "upper-greedy",
            Method::UpperExactAlpha => "upper-exact-alpha",
            Method::Exact => "exact",
            Method::AlphaK => "alpha_k",
            Method::FirstMoment => "first-moment",
        }
    }
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Config(format!("unknown method {s:?}")))
    }
}

/// Graph model sampled in every trial.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum HostModel {
    #[default]
    Gnp,
    /// `K_n` regardless of `p`.
    Complete,
    /// The edgeless graph regardless of `p`.
    Empty,
}

fn default_epsilon() -> f64 {
    0.1
}

/// A grid of `(n, p, r)` cells, each run for `trials` seeded trials.
///
/// Read from JSON with the same field names.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub n_values: Vec<usize>,
    pub p_values: Vec<f64>,
    pub r_values: Vec<usize>,
    pub trials: usize,
    pub master_seed: u64,
    pub methods: Vec<Method>,
    /// Expansion limits per method; missing entries use the crate default.
    #[serde(default)]
    pub budgets: BTreeMap<Method, u64>,
    #[serde(default = "default_epsilon")]
    pub epsilon: f64,
    #[serde(default)]
    pub host: HostModel,
    /// Fill `elapsed_ms`; off by default so that output is reproducible.
    #[serde(default)]
    pub record_timing: bool,
    /// Keep the saturated subgraphs of the `upper-*` and `exact` methods.
    #[serde(default)]
    pub retain_certificates: bool,
}

impl ExperimentConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        let cfg: ExperimentConfig = serde_json::from_str(text)?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn from_file(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn budget(&self, method: Method) -> u64 {
        self.budgets.get(&method).copied().unwrap_or(DEFAULT_BUDGET)
    }

    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::Config(msg));
        if self.trials < 1 {
            return fail("trials must be at least 1".into());
        }
        if self.n_values.is_empty() || self.p_values.is_empty() || self.r_values.is_empty() {
            return fail("n_values, p_values and r_values must be nonempty".into());
        }
        if let Some(n) = self.n_values.iter().find(|&&n| n < 2) {
            return fail(format!("n values must be at least 2, got {n}"));
        }
        if let Some(p) = self.p_values.iter().find(|&&p| !(p > 0.0 && p < 1.0)) {
            return fail(format!("p values must lie in (0, 1), got {p}"));
        }
        if let Some(r) = self.r_values.iter().find(|&&r| r < 2) {
            return fail(format!("r values must be at least 2, got {r}"));
        }
        if self.methods.is_empty() {
            return fail("at least one method is required".into());
        }
        let mut sorted = self.methods.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != self.methods.len() {
            return fail("methods must not repeat".into());
        }
        if !(0.0..1.0).contains(&self.epsilon) {
            return fail(format!("epsilon must lie in [0, 1), got {}", self.epsilon));
        }
        if self.methods.contains(&Method::Exact) {
            if let Some(n) = self.n_values.iter().find(|&&n| n > EXACT_MAX_N) {
                return fail(format!("method exact accepts n <= {EXACT_MAX_N}, got {n}"));
            }
        }
        Ok(())
    }
}
