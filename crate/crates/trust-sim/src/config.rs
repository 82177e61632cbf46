use serde::{Deserialize, Serialize};
use subjective_logic::DiscountVariant;

/// One cell of the experiment grid: a network and bootstrap setting
/// plus the candidate operator whose exploration pipeline is paired
/// against the classical baseline on identical answer streams.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimConfig {
    pub n_agents: u32,
    /// Probability of each directed connection, in percent.
    pub pl_percent: u32,
    /// Number of bootstrap exchanges per known neighbor.
    pub n_bootstrap: u32,
    /// Explorations run against one bootstrapped network.
    pub n_explorations: u32,
    pub candidate: DiscountVariant,
    pub master_seed: u64,
    pub run_id: u32,
    /// Redraw the bootstrap evidence for every exploration instead of
    /// sharing one bootstrap across a network's explorations.
    pub rebootstrap_each_exploration: bool,
}
