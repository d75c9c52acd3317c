//! A small seeded experiment grid, written as CSV and summarized.
//!
//! cargo run --release --example experiment_grid

use starsat::experiments::{records_to_csv_string, run_grid, summarize, write_summary_csv, ExperimentConfig};

fn main() -> starsat::error::Result<()> {
    let config = ExperimentConfig::from_json(
        r#"{
            "n_values": [60, 120],
            "p_values": [0.5],
            "r_values": [2, 3],
            "trials": 5,
            "master_seed": 1,
            "methods": ["lower", "upper-greedy", "upper-exact-alpha", "alpha_k", "first-moment"]
        }"#,
    )?;
    let records = run_grid(&config, 2)?;
    let csv = records_to_csv_string(&records)?;
    println!("{} records; first rows:", records.len());
    for line in csv.lines().take(4) {
        println!("  {line}");
    }
    let rows = summarize(&records, config.epsilon)?;
    write_summary_csv(&rows, std::io::stdout())?;
    Ok(())
}
