use std::collections::BTreeMap;
use std::io::Write;

use serde::{Deserialize, Serialize};
use statrs::statistics::Statistics;

use super::config::Method;
use super::grid::TrialRecord;
use crate::error::{Error, Result};
use crate::independence::alpha_k_predicted_band;
use crate::params::ProbParams;
use crate::saturation::reference_bands;

/// Aggregate of one `(n, p, r, method)` group.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SummaryRow {
    pub n: usize,
    pub p: f64,
    pub r: usize,
    pub method: Method,
    pub count: usize,
    pub mean: f64,
    /// Sample standard deviation; 0 for a single value.
    pub stdev: f64,
    pub min: f64,
    pub max: f64,
    pub band: Option<(f64, f64)>,
    pub band_hit_frac: Option<f64>,
}

/// The band a method's values are compared against: the `alpha_{r-2}`
/// window for `alpha_k` and `first-moment`, the main saturation band
/// otherwise. `None` where the band formula is undefined.
pub fn method_band(method: Method, n: usize, p: f64, r: usize, epsilon: f64) -> Option<(f64, f64)> {
    let params = ProbParams::new(p).ok()?;
    match method {
        Method::AlphaK | Method::FirstMoment => alpha_k_predicted_band(n as u64, &params, r as u64 - 2).ok(),
        _ => reference_bands(n as u64, &params, r as u64, epsilon).ok().map(|b| b.main),
    }
}

/// Fraction of `values` inside the closed interval `band`.
pub fn band_hit_fraction(values: &[f64], band: (f64, f64)) -> f64 {
    let hits = values.iter().filter(|&&v| band.0 <= v && v <= band.1).count();
    hits as f64 / values.len() as f64
}

/// Groups records by `(n, p, r, method)`. Refuses records produced by
/// different random generators.
pub fn summarize(records: &[TrialRecord], epsilon: f64) -> Result<Vec<SummaryRow>> {
    let first = records
        .first()
        .ok_or_else(|| Error::Domain("no records to summarize".into()))?;
    if let Some(other) = records.iter().find(|r| r.rng_id != first.rng_id) {
        return Err(Error::Config(format!(
            "records mix rng ids {:?} and {:?}",
            first.rng_id, other.rng_id
        )));
    }
    let mut groups: BTreeMap<(usize, u64, usize, Method), Vec<f64>> = BTreeMap::new();
    for rec in records {
        groups
            .entry((rec.n, rec.p.to_bits(), rec.r, rec.method))
            .or_default()
            .push(rec.value);
    }
    Ok(groups
        .into_iter()
        .map(|((n, p_bits, r, method), values)| {
            let p = f64::from_bits(p_bits);
            let band = method_band(method, n, p, r, epsilon);
            SummaryRow {
                n,
                p,
                r,
                method,
                count: values.len(),
                mean: values.iter().mean(),
                stdev: if values.len() > 1 { values.iter().std_dev() } else { 0.0 },
                min: values.iter().copied().fold(f64::INFINITY, f64::min),
                max: values.iter().copied().fold(f64::NEG_INFINITY, f64::max),
                band_hit_frac: band.map(|b| band_hit_fraction(&values, b)),
                band,
            }
        })
        .collect())
}

pub const SUMMARY_COLUMNS: [&str; 12] = [
    "n", "p_decimal", "r", "method", "count", "mean", "stdev", "min", "max", "band_lo", "band_hi", "band_hit_frac",
];

pub fn write_summary_csv<W: Write>(rows: &[SummaryRow], out: W) -> Result<()> {
    let io = |e: csv::Error| Error::Io(std::io::Error::other(e));
    let mut w = csv::Writer::from_writer(out);
    w.write_record(SUMMARY_COLUMNS).map_err(io)?;
    let opt = |x: Option<f64>| x.map(|v| v.to_string()).unwrap_or_default();
    for row in rows {
        w.write_record([
            row.n.to_string(),
            row.p.to_string(),
            row.r.to_string(),
            row.method.to_string(),
            row.count.to_string(),
            row.mean.to_string(),
            row.stdev.to_string(),
            row.min.to_string(),
            row.max.to_string(),
            opt(row.band.map(|b| b.0)),
            opt(row.band.map(|b| b.1)),
            opt(row.band_hit_frac),
        ])
        .map_err(io)?;
    }
    w.flush()?;
    Ok(())
}
