//! Star-saturation numbers of graphs and random graphs.
//!
//! A spanning subgraph `H` of `G` is `K_{1,r}`-saturated when `Δ(H) <= r - 1`
//! and every edge of `G` outside `H` has an endpoint of `H`-degree `r - 1`.
//! The crate bounds and computes the least such `|E(H)|`:
//!
//! - [`saturation::sat_lower_bound`]: `(r-1)(n - alpha_{r-2}(G))/2`
//! - [`saturation::construct_upper`]: an independent set plus an
//!   `(r-1)`-factor of the rest
//! - [`saturation::sat_exact`]: exact values for small hosts
//! - [`experiments::run_grid`]: seeded grids over `G(n, p)`
//!
//! Runnable examples live in `examples/`: `random_graphs`, `k_independence`,
//! `factors`, `saturation_bounds`, `exact_saturation`, `experiment_grid` and
//! `first_moment`.
//!
//! ```
//! use starsat::graph::Graph;
//! use starsat::saturation::{classical_sat_star, sat_exact};
//!
//! let res = sat_exact(&Graph::complete(6), 3, 1_000_000).unwrap();
//! assert_eq!(res.value as u64, classical_sat_star(6, 3).unwrap());
//! assert!(res.certificate.is_valid());
//! ```

mod bitset;
pub mod cli;
pub mod error;
pub mod experiments;
pub mod factor;
pub mod graph;
pub mod independence;
pub mod io;
pub mod params;
pub mod rng;
pub mod saturation;
