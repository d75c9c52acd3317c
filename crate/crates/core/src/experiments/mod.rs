//! Seeded experiment grids over `(n, p, r)` and small-graph cross-checks.
//!
//! Every trial samples one graph from a seed derived from the master seed
//! and the cell and trial index; all methods of the trial run on that graph.

mod config;
mod grid;
mod summary;
mod verify;

pub use config::{ExperimentConfig, HostModel, Method};
pub use grid::{
    first_moment_threshold, read_records_csv, records_to_csv_string, run_grid, trial_seed, write_records_csv,
    TrialRecord, RECORD_COLUMNS,
};
pub use summary::{band_hit_fraction, method_band, summarize, write_summary_csv, SummaryRow, SUMMARY_COLUMNS};
pub use verify::{verify_small, VerifyReport, Violation};
