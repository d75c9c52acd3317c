//! Command-line interface.
//!
//! Results go to standard output (or to `--out`, written atomically);
//! diagnostics go to standard error under the `STARSAT_LOG` filter. Exit
//! status is 0 on success, 1 on domain or infeasibility errors and 2 on usage
//! errors.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::experiments::{
    read_records_csv, records_to_csv_string, run_grid, summarize, verify_small, write_summary_csv,
    ExperimentConfig,
};
use crate::factor::{af_embedding_condition, d_factor};
use crate::graph::{regular_circulant, Graph};
use crate::independence::{
    alpha_k_cover_bound, alpha_k_exact, alpha_k_predicted_band, binomial_tail_upper, exact_binomial_cdf,
    first_moment_xs, greedy_k_independent_by_degree, FirstMomentInput, DEFAULT_BUDGET,
};
use crate::io::{host_hash, read_graph_file, to_edge_list_string};
use crate::params::ProbParams;
use crate::rng::{sample_gnp, RngSeed};
use crate::saturation::{
    check_certificate, classical_sat_clique, classical_sat_star, construct_upper, reference_bands, sat_exact,
    sat_lower_bound, AlphaSource, IsMethod, SaturationCertificate,
};

#[derive(Parser, Debug)]
#[command(name = "starsat", version, about = "Star-saturation numbers of graphs and random graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Args, Debug)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    pub format: Format,
    /// Write the result to this file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Write a graph as an edge list.
    #[command(subcommand)]
    Gen(GenCommand),
    /// Greedy, exact or cover-bound alpha_k.
    Alpha {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = AlphaMethod::Exact)]
        method: AlphaMethod,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Lower bound (r-1)(n - alpha_{r-2})/2.
    SatLower {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        r: usize,
        #[arg(long, value_enum, default_value_t = LowerAlpha::Exact)]
        alpha: LowerAlpha,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Saturated subgraph from an independent set and a factor.
    SatUpper {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        r: usize,
        #[arg(long, value_enum, default_value_t = UpperMethod::Exact)]
        method: UpperMethod,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// Write the certificate JSON here.
        #[arg(long)]
        cert: Option<PathBuf>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Exact saturation number of a small graph.
    SatExact {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        r: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// Write the certificate JSON here.
        #[arg(long)]
        cert: Option<PathBuf>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Check a saturation certificate against a host graph.
    Check {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        cert: PathBuf,
        /// Star order; defaults to the certificate's.
        #[arg(long)]
        r: Option<usize>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Closed-form values.
    #[command(subcommand)]
    Formula(FormulaCommand),
    /// Experiment grids and cross-checks.
    #[command(subcommand)]
    Experiment(ExperimentCommand),
    /// First-moment counts and binomial tails.
    #[command(subcommand)]
    Moment(MomentCommand),
    /// d-factor query.
    Factor {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        d: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum AlphaMethod {
    Greedy,
    Exact,
    Cover,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum LowerAlpha {
    Exact,
    GreedyUpper,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum UpperMethod {
    Exact,
    Greedy,
}

#[derive(Subcommand, Debug)]
pub enum GenCommand {
    /// G(n, p).
    Gnp {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// d-regular circulant on n vertices.
    Regular {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    Complete {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    Empty {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
pub enum FormulaCommand {
    /// sat(n, K_{1,r}).
    Star { n: u64, r: u64 },
    /// sat(n, K_r).
    Clique { n: u64, r: u64 },
    /// Main band, plus the r = 2 band of Zito.
    Bands {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        p: f64,
        #[arg(long)]
        r: u64,
        #[arg(long, default_value_t = 0.1)]
        eps: f64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Predicted window for alpha_k(G(n, p)).
    AlphaBand {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        p: f64,
        #[arg(long)]
        k: u64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Sufficient condition for embedding a bounded-degree graph in G(n, p).
    Af {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        delta: u64,
        #[arg(long)]
        p: f64,
    },
}

#[derive(Subcommand, Debug)]
pub enum ExperimentCommand {
    /// Run a grid from a JSON config and emit one record per trial and method.
    Run {
        #[arg(long)]
        config: PathBuf,
        /// Overrides the config's master seed.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Per-cell statistics and band hits from a records CSV.
    Summarize {
        #[arg(long)]
        records: PathBuf,
        #[arg(long, default_value_t = 0.1)]
        eps: f64,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Oracle cross-checks on small graphs.
    VerifySmall {
        #[arg(long)]
        max_n: usize,
        #[arg(long, value_delimiter = ',', default_values_t = [2, 3])]
        r: Vec<usize>,
        #[arg(long)]
        count: usize,
        #[arg(long)]
        seed: u64,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Subcommand, Debug)]
pub enum MomentCommand {
    /// E[X_s]: expected number of s-sets spanning at most floor(k s / 2) edges.
    Xs {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        p: f64,
        #[arg(long)]
        k: u64,
        #[arg(long)]
        s: u64,
    },
    /// Upper bound C(n, s) q^(n-s) on P(Bin(n, p) <= s).
    Tail {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        s: u64,
        #[arg(long)]
        p: f64,
    },
    /// Exact P(Bin(n, p) <= s).
    Cdf {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        s: u64,
        #[arg(long)]
        p: f64,
    },
}

/// Every leaf command and the library operation it exposes.
pub const COMMAND_TABLE: &[(&str, &str)] = &[
    ("gen gnp", "rng::sample_gnp"),
    ("gen regular", "graph::regular_circulant"),
    ("gen complete", "Graph::complete"),
    ("gen empty", "Graph::empty"),
    ("alpha", "independence::alpha_k_exact / greedy / cover bound"),
    ("sat-lower", "saturation::sat_lower_bound"),
    ("sat-upper", "saturation::construct_upper"),
    ("sat-exact", "saturation::sat_exact"),
    ("check", "saturation::check_certificate"),
    ("formula star", "saturation::classical_sat_star"),
    ("formula clique", "saturation::classical_sat_clique"),
    ("formula bands", "saturation::reference_bands"),
    ("formula alpha-band", "independence::alpha_k_predicted_band"),
    ("formula af", "factor::af_embedding_condition"),
    ("experiment run", "experiments::run_grid"),
    ("experiment summarize", "experiments::summarize"),
    ("experiment verify-small", "experiments::verify_small"),
    ("moment xs", "independence::first_moment_xs"),
    ("moment tail", "independence::binomial_tail_upper"),
    ("moment cdf", "independence::exact_binomial_cdf"),
    ("factor", "factor::d_factor"),
];

/// Installs the stderr logger filtered by `STARSAT_LOG` (default `error`).
pub fn init_logging() {
    let env = env_logger::Env::new().filter_or("STARSAT_LOG", "error");
    let _ = env_logger::Builder::from_env(env)
        .target(env_logger::Target::Stderr)
        .try_init();
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit status. Results are written to `stdout`, messages to `stderr`.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    match dispatch(cli.command, stdout) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            1
        }
    }
}

/// Writes `text` to `path` through a temporary file in the same directory,
/// so that a failure never leaves a partial file behind.
pub fn write_atomic(path: &Path, text: &str) -> Result<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(text.as_bytes())?;
    tmp.persist(path).map_err(|e| Error::Io(e.error))?;
    Ok(())
}

fn emit(stdout: &mut dyn Write, out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => write_atomic(path, text),
        None => Ok(stdout.write_all(text.as_bytes())?),
    }
}

fn json<T: Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

/// Renders `plain` or the JSON form of `value` per `format`.
fn render<T: Serialize>(format: Format, value: &T, plain: impl FnOnce() -> String) -> Result<String> {
    match format {
        Format::Json => json(value),
        Format::Plain | Format::Csv => Ok(plain()),
    }
}

fn dispatch(command: Command, stdout: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Gen(gen) => {
            let (g, out) = match gen {
                GenCommand::Gnp { n, p, seed, out } => (sample_gnp(n, p, RngSeed::new(seed))?, out),
                GenCommand::Regular { n, d, out } => (regular_circulant(n, d)?, out),
                GenCommand::Complete { n, out } => (Graph::complete(n), out),
                GenCommand::Empty { n, out } => (Graph::empty(n), out),
            };
            emit(stdout, out.as_deref(), &to_edge_list_string(&g))?;
        }
        Command::Alpha {
            graph,
            k,
            method,
            budget,
            output,
        } => {
            let g = read_graph_file(&graph)?;
            #[derive(Serialize)]
            struct Out {
                k: usize,
                size: usize,
                exact: bool,
                vertices: Option<Vec<usize>>,
            }
            let res = match method {
                AlphaMethod::Greedy => {
                    let w = greedy_k_independent_by_degree(&g, k);
                    Out {
                        k,
                        size: w.size(),
                        exact: false,
                        vertices: Some(w.vertices),
                    }
                }
                AlphaMethod::Exact => {
                    let r = alpha_k_exact(&g, k, budget);
                    if !r.exact {
                        log::warn!("budget exhausted after {} expansions; result is a lower bound", r.expansions);
                    }
                    Out {
                        k,
                        size: r.witness.size(),
                        exact: r.exact,
                        vertices: Some(r.witness.vertices),
                    }
                }
                AlphaMethod::Cover => Out {
                    k,
                    size: alpha_k_cover_bound(&g, k),
                    exact: false,
                    vertices: None,
                },
            };
            let text = render(output.format, &res, || format!("{}\n", res.size))?;
            emit(stdout, output.out.as_deref(), &text)?;
        }
        Command::SatLower {
            graph,
            r,
            alpha,
            budget,
            output,
        } => {
            let g = read_graph_file(&graph)?;
            let source = match alpha {
                LowerAlpha::Exact => AlphaSource::Exact,
                LowerAlpha::GreedyUpper => AlphaSource::GreedyUpper,
            };
            let lb = sat_lower_bound(&g, r, source, budget)?;
            if !lb.certified {
                log::warn!("alpha_{} not certified; bound uses an upper estimate", r - 2);
            }
            let text = render(output.format, &lb, || format!("{}\n", lb.value))?;
            emit(stdout, output.out.as_deref(), &text)?;
        }
        Command::SatUpper {
            graph,
            r,
            method,
            budget,
            cert,
            output,
        } => {
            let g = read_graph_file(&graph)?;
            let is = match method {
                UpperMethod::Exact => IsMethod::Exact,
                UpperMethod::Greedy => IsMethod::Greedy,
            };
            let c = construct_upper(&g, r, is, budget)?;
            if let Some(path) = cert {
                write_atomic(&path, &(c.certificate.to_json()? + "\n"))?;
            }
            let text = render(output.format, &c, || format!("{}\n", c.upper))?;
            emit(stdout, output.out.as_deref(), &text)?;
        }
        Command::SatExact {
            graph,
            r,
            budget,
            cert,
            output,
        } => {
            let g = read_graph_file(&graph)?;
            let res = sat_exact(&g, r, budget)?;
            if !res.exact {
                log::warn!("budget exhausted; sat lies in [{}, {}]", res.lower, res.value);
            }
            if let Some(path) = cert {
                write_atomic(&path, &(res.certificate.to_json()? + "\n"))?;
            }
            let text = render(output.format, &res, || {
                if res.exact {
                    format!("{}\n", res.value)
                } else {
                    format!("{}..{}\n", res.lower, res.value)
                }
            })?;
            emit(stdout, output.out.as_deref(), &text)?;
        }
        Command::Check { graph, cert, r, output } => {
            let g = read_graph_file(&graph)?;
            let given = SaturationCertificate::from_json(&std::fs::read_to_string(&cert)?)?;
            if given.host_hash != host_hash(&g) || given.n != g.n() {
                return Err(Error::Domain(format!(
                    "certificate was issued for a different host (hash {:016x}, graph {:016x})",
                    given.host_hash,
                    host_hash(&g)
                )));
            }
            let checked = check_certificate(&given.edges, &g, r.unwrap_or(given.r))?;
            let text = render(output.format, &checked, || {
                let mut line = checked.verdict.to_string();
                if let Some(v) = checked.offending_vertex {
                    line += &format!(" vertex {v}");
                }
                if let Some((u, v)) = checked.offending_edge {
                    line += &format!(" edge {u} {v}");
                }
                line + "\n"
            })?;
            emit(stdout, output.out.as_deref(), &text)?;
            return Ok(if checked.is_valid() { 0 } else { 1 });
        }
        Command::Formula(f) => formula(f, stdout)?,
        Command::Experiment(e) => return experiment(e, stdout),
        Command::Moment(m) => {
            let value = match m {
                MomentCommand::Xs { n, p, k, s } => {
                    first_moment_xs(&FirstMomentInput::new(n, ProbParams::new(p)?, k, s)?)
                }
                MomentCommand::Tail { n, s, p } => binomial_tail_upper(n, s, p)?,
                MomentCommand::Cdf { n, s, p } => exact_binomial_cdf(n, s, p)?,
            };
            writeln!(stdout, "{value}")?;
        }
        Command::Factor { graph, d, output } => {
            let g = read_graph_file(&graph)?;
            let f = d_factor(&g, d);
            let text = render(output.format, &f, || {
                if f.found {
                    let mut s = format!("found {}\n", f.edges.len());
                    for (u, v) in &f.edges {
                        s += &format!("{u} {v}\n");
                    }
                    s
                } else {
                    "none\n".into()
                }
            })?;
            emit(stdout, output.out.as_deref(), &text)?;
            return Ok(if f.found { 0 } else { 1 });
        }
    }
    Ok(0)
}

fn formula(f: FormulaCommand, stdout: &mut dyn Write) -> Result<()> {
    match f {
        FormulaCommand::Star { n, r } => writeln!(stdout, "{}", classical_sat_star(n, r)?)?,
        FormulaCommand::Clique { n, r } => writeln!(stdout, "{}", classical_sat_clique(n, r)?)?,
        FormulaCommand::Bands { n, p, r, eps, output } => {
            let b = reference_bands(n, &ProbParams::new(p)?, r, eps)?;
            let text = render(output.format, &b, || {
                let mut s = format!("main {} {}\n", b.main.0, b.main.1);
                if let Some((lo, hi)) = b.zito {
                    s += &format!("zito {lo} {hi}\n");
                }
                s
            })?;
            emit(stdout, output.out.as_deref(), &text)?;
        }
        FormulaCommand::AlphaBand { n, p, k, output } => {
            let (lo, hi) = alpha_k_predicted_band(n, &ProbParams::new(p)?, k)?;
            let text = render(output.format, &(lo, hi), || format!("{lo} {hi}\n"))?;
            emit(stdout, output.out.as_deref(), &text)?;
        }
        FormulaCommand::Af { n, delta, p } => {
            writeln!(stdout, "{}", af_embedding_condition(n, delta, &ProbParams::new(p)?))?
        }
    }
    Ok(())
}

fn experiment(e: ExperimentCommand, stdout: &mut dyn Write) -> Result<i32> {
    match e {
        ExperimentCommand::Run {
            config,
            seed,
            jobs,
            format,
            out,
        } => {
            let mut cfg = ExperimentConfig::from_file(&config)?;
            if let Some(seed) = seed {
                cfg.master_seed = seed;
            }
            let records = run_grid(&cfg, jobs)?;
            let text = match format {
                Format::Json => json(&records)?,
                Format::Plain | Format::Csv => records_to_csv_string(&records)?,
            };
            emit(stdout, out.as_deref(), &text)?;
        }
        ExperimentCommand::Summarize {
            records,
            eps,
            format,
            out,
        } => {
            let recs = read_records_csv(std::fs::File::open(&records)?)?;
            let rows = summarize(&recs, eps)?;
            let text = match format {
                Format::Json => json(&rows)?,
                Format::Plain | Format::Csv => {
                    let mut buf = Vec::new();
                    write_summary_csv(&rows, &mut buf)?;
                    String::from_utf8(buf).expect("csv output is utf-8")
                }
            };
            emit(stdout, out.as_deref(), &text)?;
        }
        ExperimentCommand::VerifySmall {
            max_n,
            r,
            count,
            seed,
            output,
        } => {
            let report = verify_small(max_n, &r, count, seed)?;
            let text = render(output.format, &report, || {
                let mut s = format!("{} violations\n", report.violations.len());
                for v in &report.violations {
                    s += &format!("{} r={}: {}\n", v.graph, v.r, v.message);
                }
                s
            })?;
            emit(stdout, output.out.as_deref(), &text)?;
            return Ok(if report.violations.is_empty() { 0 } else { 1 });
        }
    }
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("starsat").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    fn leaves(cmd: &clap::Command, prefix: &str, acc: &mut Vec<String>) {
        let subs: Vec<_> = cmd.get_subcommands().filter(|c| c.get_name() != "help").collect();
        if subs.is_empty() {
            acc.push(prefix.trim().to_string());
        }
        for sub in subs {
            leaves(sub, &format!("{prefix} {}", sub.get_name()), acc);
        }
    }

    #[test]
    fn command_table_covers_every_leaf_once() {
        let mut found = Vec::new();
        leaves(&Cli::command(), "", &mut found);
        found.sort();
        let mut table: Vec<String> = COMMAND_TABLE.iter().map(|(c, _)| c.to_string()).collect();
        table.sort();
        let before = table.len();
        table.dedup();
        assert_eq!(before, table.len(), "duplicate table entries");
        assert_eq!(found, table);
        let mut ops: Vec<_> = COMMAND_TABLE.iter().map(|(_, op)| *op).collect();
        ops.sort();
        ops.dedup();
        assert_eq!(ops.len(), COMMAND_TABLE.len(), "operation reachable twice");
        Cli::command().debug_assert();
    }

    #[test]
    fn formula_star_example() {
        assert_eq!(call(&["formula", "star", "6", "3"]), (0, "5\n".into(), String::new()));
        let (code, _, err) = call(&["formula", "star", "3", "3"]);
        assert_eq!(code, 1);
        assert!(err.contains("domain error"));
    }

    #[test]
    fn usage_errors_exit_two() {
        let (code, _, err) = call(&["frobnicate"]);
        assert_eq!(code, 2);
        assert!(err.contains("frobnicate"));
        let (code, _, err) = call(&["moment", "tail", "--n", "3", "--s", "1", "--p", "0.5", "--bogus"]);
        assert_eq!(code, 2);
        assert!(err.contains("--bogus"));
        // randomized commands demand a seed
        let (code, _, err) = call(&["gen", "gnp", "--n", "5", "--p", "0.5"]);
        assert_eq!(code, 2);
        assert!(err.contains("--seed"));
    }

    #[test]
    fn check_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let g = dir.path().join("g.txt");
        let c = dir.path().join("c.json");
        let gs = g.to_str().unwrap();
        let cs = c.to_str().unwrap();
        assert_eq!(call(&["gen", "complete", "--n", "4", "--out", gs]).0, 0);
        let (code, out, _) = call(&["sat-exact", "--graph", gs, "--r", "2", "--cert", cs]);
        assert_eq!((code, out.as_str()), (0, "2\n"));
        assert_eq!(call(&["check", "--graph", gs, "--cert", cs]), (0, "valid\n".into(), String::new()));

        let bad = SaturationCertificate {
            edges: vec![],
            ..SaturationCertificate::from_json(&std::fs::read_to_string(&c).unwrap()).unwrap()
        };
        std::fs::write(&c, bad.to_json().unwrap()).unwrap();
        let (code, out, _) = call(&["check", "--graph", gs, "--cert", cs]);
        assert_eq!((code, out.as_str()), (1, "not-edge-maximal edge 0 1\n"));
    }

    #[test]
    fn failed_command_leaves_no_output_file() {
        let dir = tempfile::tempdir().unwrap();
        let out = dir.path().join("g.txt");
        let (code, _, _) = call(&["gen", "regular", "--n", "5", "--d", "3", "--out", out.to_str().unwrap()]);
        assert_eq!(code, 1);
        assert!(!out.exists());
        assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 0);
    }

    #[test]
    fn numeric_commands() {
        assert_eq!(call(&["formula", "clique", "4", "3"]).1, "3\n");
        assert_eq!(call(&["moment", "tail", "--n", "2", "--s", "0", "--p", "0.5"]).1, "0.25\n");
        assert_eq!(call(&["moment", "cdf", "--n", "2", "--s", "0", "--p", "0.5"]).1, "0.25\n");
        let (_, out, _) = call(&["formula", "bands", "--n", "1024", "--p", "0.5", "--r", "3"]);
        assert_eq!(out, "main 1002 1006\n");
    }
}
