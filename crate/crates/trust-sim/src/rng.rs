//! Derived random streams. Every phase of every grid cell owns a
//! ChaCha8 stream seeded from a hash of its coordinates, so
//! explorations are independent, order-insensitive, and
//! parallelizable without shared RNG state.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sha2::{Digest, Sha256};

pub const PHASE_NETWORK: &str = "network";
pub const PHASE_BOOTSTRAP: &str = "bootstrap";
pub const PHASE_EXPLORE: &str = "explore";

/// The stream for (master_seed, run, pl, nb, exploration, phase).
/// Coordinates a phase does not depend on are passed as 0: the network
/// phase ignores the bootstrap and exploration indices, and a shared
/// bootstrap ignores the exploration index. The candidate operator is
/// deliberately not part of the derivation, so paired pipelines see
/// identical networks, bootstraps, and answer streams.
pub fn stream(
    master_seed: u64,
    run_id: u32,
    pl_percent: u32,
    n_bootstrap: u32,
    exploration_idx: u32,
    phase: &str,
) -> ChaCha8Rng {
    let mut hasher = Sha256::new();
    hasher.update(master_seed.to_le_bytes());
    hasher.update(run_id.to_le_bytes());
    hasher.update(pl_percent.to_le_bytes());
    hasher.update(n_bootstrap.to_le_bytes());
    hasher.update(exploration_idx.to_le_bytes());
    hasher.update(phase.as_bytes());
    ChaCha8Rng::from_seed(hasher.finalize().into())
}
