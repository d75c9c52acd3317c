use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::independence::DEFAULT_BUDGET;
use crate::rng::{derive_seed, sample_gnp, RngSeed};
use crate::saturation::{
    construct_upper, greedy_saturated_lex, min_maximal_matching_bruteforce, sat_exact, sat_lower_bound, AlphaSource,
    IsMethod,
};

/// A failed cross-check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub graph: String,
    pub r: usize,
    pub message: String,
}

/// Result of [`verify_small`].
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct VerifyReport {
    pub graphs: usize,
    pub checks: usize,
    pub violations: Vec<Violation>,
}

/// Cross-checks lower bound, exact value, constructions and certificates on
/// `count` random graphs with `1 <= n <= max_n` (edge probability cycling
/// through 0.3, 0.5, 0.7) preceded by the complete, empty, path and cycle
/// graphs up to `max_n` vertices. For `r = 2` the exact value is also
/// compared with an enumeration of maximal matchings. When `count` is 0 no
/// graphs are checked.
pub fn verify_small(max_n: usize, rs: &[usize], count: usize, seed: u64) -> Result<VerifyReport> {
    if max_n == 0 || max_n > 10 {
        return Err(Error::Domain(format!("max_n must lie in 1..=10, got {max_n}")));
    }
    if let Some(r) = rs.iter().find(|&&r| r < 2) {
        return Err(Error::Domain(format!("r values must be at least 2, got {r}")));
    }
    let mut report = VerifyReport::default();
    if count == 0 {
        return Ok(report);
    }
    let mut corpus: Vec<(String, Graph)> = Vec::new();
    for n in 1..=max_n {
        corpus.push((format!("K_{n}"), Graph::complete(n)));
        corpus.push((format!("empty_{n}"), Graph::empty(n)));
        corpus.push((format!("path_{n}"), Graph::path(n)));
        if n >= 3 {
            corpus.push((format!("cycle_{n}"), Graph::cycle(n)?));
        }
    }
    for i in 0..count {
        let s = derive_seed(seed, &[i as u64]);
        let n = 1 + (s % max_n as u64) as usize;
        let p = [0.3, 0.5, 0.7][i % 3];
        corpus.push((format!("gnp#{i}(n={n},p={p},seed={s})"), sample_gnp(n, p, RngSeed::new(s))?));
    }
    for (name, g) in &corpus {
        for &r in rs {
            report.checks += 1;
            let mut fail = |message: String| {
                report.violations.push(Violation {
                    graph: name.clone(),
                    r,
                    message,
                })
            };
            let lower = sat_lower_bound(g, r, AlphaSource::Exact, DEFAULT_BUDGET)?;
            let exact = sat_exact(g, r, DEFAULT_BUDGET)?;
            let upper = construct_upper(g, r, IsMethod::Exact, DEFAULT_BUDGET)?;
            let greedy = greedy_saturated_lex(g, r)?;
            if !lower.certified || !exact.exact {
                fail("search budget exhausted".into());
            }
            let ex = exact.value;
            if lower.ceiled > ex as u64 {
                fail(format!("lower bound {} exceeds exact {ex}", lower.value));
            }
            if ex > upper.upper || ex > greedy.num_edges() {
                fail(format!(
                    "exact {ex} exceeds constructions {} / {}",
                    upper.upper,
                    greedy.num_edges()
                ));
            }
            for (label, cert) in [
                ("exact", &exact.certificate),
                ("construct", &upper.certificate),
                ("greedy", &greedy),
            ] {
                if !cert.is_valid() {
                    fail(format!("{label} certificate is {}", cert.verdict));
                }
            }
            if r == 2 {
                let mm = min_maximal_matching_bruteforce(g)?;
                if mm != ex {
                    fail(format!("exact {ex} differs from minimum maximal matching {mm}"));
                }
            }
        }
    }
    report.graphs = corpus.len();
    Ok(report)
}
