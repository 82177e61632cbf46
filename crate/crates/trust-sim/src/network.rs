use rand::Rng;
use std::collections::BTreeSet;

use crate::config::SimConfig;

/// A simulated agent: its hidden probability of answering any query
/// truthfully and the agents it knows directly. Connections are
/// directed and never point back at the agent itself.
#[derive(Debug, Clone, PartialEq)]
pub struct AgentSpec {
    pub id: u32,
    pub p_truth: f64,
    pub neighbors: BTreeSet<u32>,
}

/// Draws the network: first every agent's truthfulness probability
/// (uniform on [0,1]), then one Bernoulli(pl_percent/100) coin per
/// ordered agent pair. The draw order is part of the determinism
/// contract.
pub fn build_network(cfg: &SimConfig, rng: &mut impl Rng) -> Vec<AgentSpec> {
    let n = cfg.n_agents;
    let p_truths: Vec<f64> = (0..n).map(|_| rng.random_range(0.0..=1.0)).collect();
    let p_edge = f64::from(cfg.pl_percent) / 100.0;
    let mut agents = Vec::with_capacity(n as usize);
    for x in 0..n {
        let mut neighbors = BTreeSet::new();
        for y in 0..n {
            if y != x && rng.random_bool(p_edge) {
                neighbors.insert(y);
            }
        }
        agents.push(AgentSpec {
            id: x,
            p_truth: p_truths[x as usize],
            neighbors,
        });
    }
    agents
}
