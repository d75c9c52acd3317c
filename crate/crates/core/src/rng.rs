//! Seeded randomness and `G(n, p)` sampling.
//!
//! All randomness flows from [`RngSeed`] through ChaCha8 as implemented by
//! `rand_chacha` 0.3: the 64-bit seed is expanded with `SeedableRng::seed_from_u64`
//! (PCG32 key expansion) and the stream index selects the ChaCha stream.
//! Uniform reals are `(next_u64 >> 11) * 2^-53`. [`RNG_ID`] names this
//! combination in experiment output.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Identifier of the generator recorded in every experiment row.
pub const RNG_ID: &str = "chacha8-rc0.3";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RngSeed {
    pub seed: u64,
    pub stream: u64,
}

impl RngSeed {
    pub fn new(seed: u64) -> Self {
        RngSeed { seed, stream: 0 }
    }

    pub fn with_stream(seed: u64, stream: u64) -> Self {
        RngSeed { seed, stream }
    }

    pub fn rng(&self) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(self.stream);
        rng
    }
}

impl From<u64> for RngSeed {
    fn from(seed: u64) -> Self {
        RngSeed::new(seed)
    }
}

/// SplitMix64 output function.
pub fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Folds `parts` into `master` with SplitMix64: `h <- splitmix64(h ^ part)`.
pub fn derive_seed(master: u64, parts: &[u64]) -> u64 {
    parts
        .iter()
        .fold(splitmix64(master), |h, &x| splitmix64(h ^ x))
}

/// Samples `G(n, p)`.
///
/// Pairs are visited in lexicographic order `(0,1), (0,2), ..., (n-2,n-1)`,
/// each consuming exactly one uniform real `u`; the pair is an edge iff
/// `u < p`. Boundary values `p = 0` and `p = 1` are accepted.
pub fn sample_gnp(n: usize, p: f64, seed: RngSeed) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Domain(format!("edge probability must lie in [0, 1], got {p}")));
    }
    let mut rng = seed.rng();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen::<f64>() < p {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
    }
    Ok(Graph::from_sorted_adjacency(adj))
}
