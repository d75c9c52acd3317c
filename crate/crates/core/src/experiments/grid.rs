use std::io::{Read, Write};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::config::{ExperimentConfig, HostModel, Method};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::independence::{alpha_k_exact, first_moment_xs, FirstMomentInput};
use crate::params::ProbParams;
use crate::rng::{derive_seed, sample_gnp, RngSeed, RNG_ID};
use crate::saturation::{construct_upper, sat_exact, sat_lower_bound, AlphaSource, IsMethod, SaturationCertificate};

/// One measurement of one method on one sampled graph.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TrialRecord {
    pub n: usize,
    pub p: f64,
    pub r: usize,
    pub trial: usize,
    /// Seed of the sampled graph, shared by all methods of the trial.
    pub seed: u64,
    pub method: Method,
    pub value: f64,
    pub ell_used: Option<usize>,
    /// False when a search ran out of budget.
    pub certified: bool,
    pub elapsed_ms: u64,
    pub rng_id: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<SaturationCertificate>,
}

impl TrialRecord {
    fn sort_key(&self) -> (usize, u64, usize, usize, Method) {
        (self.n, self.p.to_bits(), self.r, self.trial, self.method)
    }
}

/// Seed of the graph in trial `trial` of cell `(n, p, r)`.
pub fn trial_seed(master: u64, n: usize, p: f64, r: usize, trial: usize) -> u64 {
    derive_seed(master, &[n as u64, p.to_bits(), r as u64, trial as u64])
}

/// Runs every `(cell, trial, method)` combination on up to `jobs` worker
/// threads. The output is sorted by `(n, p, r, trial, method)` and does not
/// depend on `jobs`.
pub fn run_grid(config: &ExperimentConfig, jobs: usize) -> Result<Vec<TrialRecord>> {
    config.validate()?;
    let mut tasks = Vec::new();
    for &n in &config.n_values {
        for &p in &config.p_values {
            for &r in &config.r_values {
                for trial in 0..config.trials {
                    tasks.push((n, p, r, trial));
                }
            }
        }
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::Config(format!("cannot start worker pool: {e}")))?;
    let nested: Vec<Result<Vec<TrialRecord>>> = pool.install(|| {
        tasks
            .par_iter()
            .map(|&(n, p, r, trial)| run_trial(config, n, p, r, trial))
            .collect()
    });
    let mut records = Vec::with_capacity(tasks.len() * config.methods.len());
    for batch in nested {
        records.extend(batch?);
    }
    records.sort_by_key(TrialRecord::sort_key);
    Ok(records)
}

fn run_trial(config: &ExperimentConfig, n: usize, p: f64, r: usize, trial: usize) -> Result<Vec<TrialRecord>> {
    let seed = trial_seed(config.master_seed, n, p, r, trial);
    let g = match config.host {
        HostModel::Gnp => sample_gnp(n, p, RngSeed::new(seed))?,
        HostModel::Complete => Graph::complete(n),
        HostModel::Empty => Graph::empty(n),
    };
    log::debug!("trial n={n} p={p} r={r} #{trial}: {} edges", g.m());
    let mut out = Vec::with_capacity(config.methods.len());
    for &method in &config.methods {
        let start = Instant::now();
        let m = measure(config, &g, p, r, method)?;
        out.push(TrialRecord {
            n,
            p,
            r,
            trial,
            seed,
            method,
            value: m.value,
            ell_used: m.ell_used,
            certified: m.certified,
            elapsed_ms: if config.record_timing {
                start.elapsed().as_millis() as u64
            } else {
                0
            },
            rng_id: RNG_ID.to_string(),
            certificate: m.certificate.filter(|_| config.retain_certificates),
        });
    }
    Ok(out)
}

struct Measurement {
    value: f64,
    ell_used: Option<usize>,
    certified: bool,
    certificate: Option<SaturationCertificate>,
}

fn measure(config: &ExperimentConfig, g: &Graph, p: f64, r: usize, method: Method) -> Result<Measurement> {
    let budget = config.budget(method);
    let plain = |value: f64, certified: bool| Measurement {
        value,
        ell_used: None,
        certified,
        certificate: None,
    };
    Ok(match method {
        Method::Lower => {
            let lb = sat_lower_bound(g, r, AlphaSource::Exact, budget)?;
            plain(*lb.value.numer() as f64 / *lb.value.denom() as f64, lb.certified)
        }
        Method::UpperGreedy | Method::UpperExactAlpha => {
            let is = if method == Method::UpperGreedy {
                IsMethod::Greedy
            } else {
                IsMethod::Exact
            };
            let c = construct_upper(g, r, is, budget)?;
            Measurement {
                value: c.upper as f64,
                ell_used: Some(c.ell_used),
                certified: !c.downgraded,
                certificate: Some(c.certificate),
            }
        }
        Method::Exact => {
            let res = sat_exact(g, r, budget)?;
            Measurement {
                value: res.value as f64,
                ell_used: None,
                certified: res.exact,
                certificate: Some(res.certificate),
            }
        }
        Method::AlphaK => {
            let res = alpha_k_exact(g, r - 2, budget);
            plain(res.witness.size() as f64, res.exact)
        }
        Method::FirstMoment => plain(first_moment_threshold(g.n() as u64, p, r as u64 - 2)? as f64, true),
    })
}

/// Least `s` with `E[X_s] < 1`, or `n + 1` if there is none.
pub fn first_moment_threshold(n: u64, p: f64, k: u64) -> Result<u64> {
    let params = ProbParams::new(p)?;
    for s in 1..=n {
        if first_moment_xs(&FirstMomentInput::new(n, params, k, s)?) < 1.0 {
            return Ok(s);
        }
    }
    Ok(n + 1)
}

/// CSV header of [`write_records_csv`].
pub const RECORD_COLUMNS: [&str; 12] = [
    "n", "p_hex", "p_decimal", "r", "trial", "method", "value", "ell_used", "certified", "elapsed_ms", "rng_id",
    "seed",
];

#[derive(Serialize, Deserialize)]
struct CsvRow {
    n: usize,
    p_hex: String,
    p_decimal: f64,
    r: usize,
    trial: usize,
    method: Method,
    value: f64,
    ell_used: Option<usize>,
    certified: bool,
    elapsed_ms: u64,
    rng_id: String,
    seed: u64,
}

pub fn write_records_csv<W: Write>(records: &[TrialRecord], out: W) -> Result<()> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(out);
    w.write_record(RECORD_COLUMNS).map_err(csv_err)?;
    for rec in records {
        w.serialize(CsvRow {
            n: rec.n,
            p_hex: format!("{:#018x}", rec.p.to_bits()),
            p_decimal: rec.p,
            r: rec.r,
            trial: rec.trial,
            method: rec.method,
            value: rec.value,
            ell_used: rec.ell_used,
            certified: rec.certified,
            elapsed_ms: rec.elapsed_ms,
            rng_id: rec.rng_id.clone(),
            seed: rec.seed,
        })
        .map_err(csv_err)?;
    }
    w.flush()?;
    Ok(())
}

pub fn records_to_csv_string(records: &[TrialRecord]) -> Result<String> {
    let mut buf = Vec::new();
    write_records_csv(records, &mut buf)?;
    Ok(String::from_utf8(buf).expect("csv output is utf-8"))
}

/// Parses records written by [`write_records_csv`]; `p` is taken from the
/// exact `p_hex` column.
pub fn read_records_csv<R: Read>(input: R) -> Result<Vec<TrialRecord>> {
    let mut rd = csv::Reader::from_reader(input);
    let header: Vec<String> = rd.headers().map_err(csv_err)?.iter().map(String::from).collect();
    if header != RECORD_COLUMNS {
        return Err(Error::Parse {
            line: 1,
            msg: format!("unexpected header {header:?}"),
        });
    }
    let mut out = Vec::new();
    for (i, row) in rd.deserialize::<CsvRow>().enumerate() {
        let line = i + 2;
        let row = row.map_err(|e| Error::Parse { line, msg: e.to_string() })?;
        let bits = u64::from_str_radix(row.p_hex.trim_start_matches("0x"), 16)
            .map_err(|e| Error::Parse { line, msg: format!("bad p_hex: {e}") })?;
        out.push(TrialRecord {
            n: row.n,
            p: f64::from_bits(bits),
            r: row.r,
            trial: row.trial,
            seed: row.seed,
            method: row.method,
            value: row.value,
            ell_used: row.ell_used,
            certified: row.certified,
            elapsed_ms: row.elapsed_ms,
            rng_id: row.rng_id,
            certificate: None,
        });
    }
    Ok(out)
}

fn csv_err(e: csv::Error) -> Error {
    Error::Io(std::io::Error::other(e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::saturation::check_certificate;

    fn config(methods: Vec<Method>) -> ExperimentConfig {
        ExperimentConfig {
            n_values: vec![8, 12],
            p_values: vec![0.3, 0.5],
            r_values: vec![2],
            trials: 5,
            master_seed: 11,
            methods,
            budgets: Default::default(),
            epsilon: 0.1,
            host: HostModel::Gnp,
            record_timing: false,
            retain_certificates: true,
        }
    }

    #[test]
    fn record_count_and_order() {
        let cfg = config(vec![Method::UpperGreedy, Method::Lower]);
        let recs = run_grid(&cfg, 2).unwrap();
        assert_eq!(recs.len(), 2 * 2 * 5 * 2);
        assert!(recs.windows(2).all(|w| w[0].sort_key() < w[1].sort_key()));
        for rec in recs.iter().filter(|r| r.method == Method::UpperGreedy) {
            let g = sample_gnp(rec.n, rec.p, RngSeed::new(rec.seed)).unwrap();
            let cert = rec.certificate.as_ref().unwrap();
            assert!(check_certificate(&cert.edges, &g, rec.r).unwrap().is_valid());
        }
    }

    #[test]
    fn complete_host_lower_bound() {
        let mut cfg = config(vec![Method::Lower]);
        cfg.n_values = vec![4];
        cfg.p_values = vec![0.5];
        cfg.trials = 1;
        cfg.host = HostModel::Complete;
        let recs = run_grid(&cfg, 1).unwrap();
        assert_eq!(recs.len(), 1);
        assert_eq!(recs[0].value, 1.5);
        assert!(recs[0].certified);
    }

    #[test]
    fn csv_round_trip_and_job_independence() {
        let mut cfg = config(Method::ALL.to_vec());
        cfg.retain_certificates = false;
        let one = records_to_csv_string(&run_grid(&cfg, 1).unwrap()).unwrap();
        let four = records_to_csv_string(&run_grid(&cfg, 4).unwrap()).unwrap();
        assert_eq!(one, four);
        assert!(one.starts_with("n,p_hex,p_decimal,r,trial,method,value,ell_used,certified,elapsed_ms,rng_id,seed\n"));
        let back = read_records_csv(one.as_bytes()).unwrap();
        assert_eq!(records_to_csv_string(&back).unwrap(), one);
    }

    #[test]
    fn first_moment_threshold_is_least() {
        let s = first_moment_threshold(300, 0.5, 1).unwrap();
        let params = ProbParams::new(0.5).unwrap();
        let at = |s| first_moment_xs(&FirstMomentInput::new(300, params, 1, s).unwrap());
        assert!(at(s) < 1.0 && at(s - 1) >= 1.0);
    }
}
