//! Star saturation: certificates, bounds, constructions and exact values.

mod certificate;
mod construct;
mod exact;
mod formulas;
mod lower;
mod report;

pub use certificate::{check_certificate, greedy_saturated, greedy_saturated_lex, SaturationCertificate, Verdict};
pub use construct::{construct_upper, IsMethod, UpperConstruction};
pub use exact::{min_maximal_matching_bruteforce, sat_exact, ExactSat, EXACT_MAX_N};
pub use formulas::{classical_sat_clique, classical_sat_star, reference_bands, ReferenceBands};
pub use lower::{sat_lower_bound, AlphaSource, LowerBound};
pub use report::{bounds_report, BoundsReport};
