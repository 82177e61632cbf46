//! Drives a full experiment grid: builds the shared networks and
//! knowledge bases for each cell, runs every exploration in parallel,
//! and returns the records in canonical order.

use rand::Rng;
use rayon::prelude::*;
use std::collections::BTreeMap;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Arc;

use crate::bootstrap::{bootstrap, KnowledgeBase};
use crate::config::SimConfig;
use crate::error::SimError;
use crate::explore::explore;
use crate::network::{build_network, AgentSpec};
use crate::record::ExplorationRecord;
use crate::rng;

type NetworkKey = (u64, u32, u32, u32);
type KbKey = (u64, u32, u32, u32, u32, u32);

/// Runs every exploration of every grid cell and returns all records
/// sorted by (run, pl, nb, exploration, candidate, agent).
///
/// Networks and knowledge bases are derived from dedicated seed
/// streams keyed only by the simulation coordinates, never by the
/// candidate operator, so configs that differ only in candidate see
/// identical worlds and identical witness answers. Explorations run in
/// parallel; `progress` is invoked with (completed, total) after each
/// one finishes. Results are deterministic for a fixed grid regardless
/// of thread count.
pub fn run_experiment<F>(
    grid: &[SimConfig],
    progress: F,
) -> Result<Vec<ExplorationRecord>, SimError>
where
    F: Fn(usize, usize) + Sync,
{
    let mut networks: BTreeMap<NetworkKey, Arc<Vec<AgentSpec>>> = BTreeMap::new();
    let mut kbs: BTreeMap<KbKey, Arc<Vec<KnowledgeBase>>> = BTreeMap::new();
    let mut tasks = Vec::new();
    for cfg in grid {
        assert!(cfg.n_agents >= 1, "a network needs at least one agent");
        let network = networks
            .entry((cfg.master_seed, cfg.n_agents, cfg.run_id, cfg.pl_percent))
            .or_insert_with(|| {
                let mut rng = rng::stream(
                    cfg.master_seed,
                    cfg.run_id,
                    cfg.pl_percent,
                    0,
                    0,
                    rng::PHASE_NETWORK,
                );
                Arc::new(build_network(cfg, &mut rng))
            })
            .clone();
        for exploration_idx in 0..cfg.n_explorations {
            let boot_idx = if cfg.rebootstrap_each_exploration {
                exploration_idx
            } else {
                0
            };
            let kb = kbs
                .entry((
                    cfg.master_seed,
                    cfg.n_agents,
                    cfg.run_id,
                    cfg.pl_percent,
                    cfg.n_bootstrap,
                    boot_idx,
                ))
                .or_insert_with(|| {
                    let mut rng = rng::stream(
                        cfg.master_seed,
                        cfg.run_id,
                        cfg.pl_percent,
                        cfg.n_bootstrap,
                        boot_idx,
                        rng::PHASE_BOOTSTRAP,
                    );
                    Arc::new(bootstrap(&network, cfg.n_bootstrap, &mut rng))
                })
                .clone();
            tasks.push((*cfg, exploration_idx, network.clone(), kb));
        }
    }

    let total = tasks.len();
    let done = AtomicUsize::new(0);
    let mut records: Vec<ExplorationRecord> = tasks
        .par_iter()
        .map(|(cfg, exploration_idx, network, kb)| {
            let mut rng = rng::stream(
                cfg.master_seed,
                cfg.run_id,
                cfg.pl_percent,
                cfg.n_bootstrap,
                *exploration_idx,
                rng::PHASE_EXPLORE,
            );
            let explorer = rng.random_range(0..cfg.n_agents);
            let result = explore(network, kb, explorer, cfg, *exploration_idx, &mut rng);
            progress(done.fetch_add(1, Ordering::Relaxed) + 1, total);
            result
        })
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .flatten()
        .collect();
    records.sort_by_key(ExplorationRecord::sort_key);
    Ok(records)
}
