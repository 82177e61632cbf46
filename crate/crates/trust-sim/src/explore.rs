//! One exploration: an explorer repeatedly queries its connections to
//! discover the rest of the network, deriving an opinion about every
//! newly found agent through two pipelines fed the same answers.

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use std::collections::{BTreeMap, BTreeSet};

use subjective_logic::geometry::in_admissible_space;
use subjective_logic::graphical::{self, WeightedOpinion};
use subjective_logic::metrics::{expected_distance, geometric_distance};
use subjective_logic::{josang, OpError, Opinion};

use crate::bootstrap::KnowledgeBase;
use crate::config::SimConfig;
use crate::error::SimError;
use crate::network::AgentSpec;
use crate::record::ExplorationRecord;

/// Uniform sample of the opinion simplex: two unit draws, sorted,
/// split the mass into belief, disbelief, and uncertainty.
pub fn sample_simplex(rng: &mut impl Rng) -> Opinion {
    let a: f64 = rng.random_range(0.0..=1.0);
    let b: f64 = rng.random_range(0.0..=1.0);
    let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
    Opinion::new(lo, hi - lo, 1.0 - hi).expect("sorted unit draws split the simplex")
}

/// The connection list `y` reveals when queried. A truthful agent
/// reveals its full neighbor set; a lying agent reveals a uniformly
/// drawn strict subset (possibly empty), fresh on every query.
fn connection_answer(y: &AgentSpec, rng: &mut ChaCha8Rng) -> Vec<u32> {
    if rng.random_bool(y.p_truth) || y.neighbors.is_empty() {
        return y.neighbors.iter().copied().collect();
    }
    loop {
        let subset: Vec<u32> = y
            .neighbors
            .iter()
            .copied()
            .filter(|_| rng.random_bool(0.5))
            .collect();
        if subset.len() < y.neighbors.len() {
            return subset;
        }
    }
}

/// The opinion `y` reveals about `subject`. The honest answer is the
/// bootstrapped opinion, or the vacuous opinion for subjects `y` never
/// exchanged with; a lie is a fresh uniform opinion different from the
/// honest one.
fn opinion_answer(
    y: &AgentSpec,
    kb: &KnowledgeBase,
    subject: u32,
    rng: &mut ChaCha8Rng,
) -> Opinion {
    let honest = kb.opinion_of(subject).unwrap_or(Opinion::VACUOUS);
    if rng.random_bool(y.p_truth) {
        return honest;
    }
    loop {
        let lie = sample_simplex(rng);
        if lie != honest {
            return lie;
        }
    }
}

/// Runs one exploration from `explorer` and returns one record per
/// agent outside the explorer's initial horizon, in agent order.
///
/// Rounds proceed until two consecutive rounds discover nothing or a
/// hard cap of 2·n_agents rounds is hit. Each round asks every current
/// connection for its connections, collects the unknown agents those
/// answers mention together with the connections that mentioned them,
/// and then asks each mentioning witness for its opinion of each
/// unknown agent. Both pipelines consume the identical answers: the
/// baseline discounts each answer by the stored trust in the witness
/// and folds with consensus fusion, the candidate discounts with the
/// configured variant and fuses by trust-expectation weights. Resolved
/// agents join the connections, each pipeline storing its own derived
/// opinion as the trust to use in later rounds.
pub fn explore(
    network: &[AgentSpec],
    kbs: &[KnowledgeBase],
    explorer: u32,
    cfg: &SimConfig,
    exploration_idx: u32,
    rng: &mut ChaCha8Rng,
) -> Result<Vec<ExplorationRecord>, SimError> {
    let n_agents = network.len() as u32;
    let initially_known: BTreeSet<u32> = {
        let mut known = network[explorer as usize].neighbors.clone();
        known.insert(explorer);
        known
    };
    let mut connections = network[explorer as usize].neighbors.clone();
    let mut ledger_base = kbs[explorer as usize].opinions.clone();
    let mut ledger_cand = ledger_base.clone();
    // Subject -> (dG_base, dG_cand, dE_base, dE_cand) at first resolution.
    let mut resolved: BTreeMap<u32, (f64, f64, f64, f64)> = BTreeMap::new();
    let mut quiet_rounds = 0;

    for _round in 0..2 * n_agents {
        // Ask every current connection who it knows; collect the
        // mentioned agents that are still unknown, with their
        // witnesses.
        let mut pending: BTreeMap<u32, BTreeSet<u32>> = BTreeMap::new();
        let connection_snapshot: Vec<u32> = connections.iter().copied().collect();
        for &y in &connection_snapshot {
            for z in connection_answer(&network[y as usize], rng) {
                if z != explorer && !connections.contains(&z) {
                    pending.entry(z).or_default().insert(y);
                }
            }
        }
        if pending.is_empty() {
            quiet_rounds += 1;
            if quiet_rounds >= 2 {
                break;
            }
            continue;
        }
        quiet_rounds = 0;

        for (z, witnesses) in pending {
            let mut baseline_parts = Vec::with_capacity(witnesses.len());
            let mut candidate_parts = Vec::with_capacity(witnesses.len());
            for &y in &witnesses {
                let answer = opinion_answer(&network[y as usize], &kbs[y as usize], z, rng);
                let trust_base = ledger_base[&y];
                let trust_cand = ledger_cand[&y];
                baseline_parts.push(josang::discount(trust_base, answer));
                let discounted = graphical::discount(trust_cand, answer, cfg.candidate);
                if !in_admissible_space(discounted, trust_cand) {
                    return Err(SimError::InvariantViolation {
                        key: format!(
                            "run {} pl {} nb {} exploration {} candidate {} subject {z}",
                            cfg.run_id,
                            cfg.pl_percent,
                            cfg.n_bootstrap,
                            exploration_idx,
                            cfg.candidate,
                        ),
                        detail: format!(
                            "discount of {answer:?} by {trust_cand:?} left the admissible space: {discounted:?}"
                        ),
                    });
                }
                candidate_parts.push(WeightedOpinion {
                    opinion: discounted,
                    weight: trust_cand.expected_value(),
                });
            }
            let derived_base =
                josang::fuse_many(baseline_parts).expect("every pending agent has a witness");
            let derived_cand = match graphical::fuse_weighted(&candidate_parts) {
                Ok(o) => o,
                // All witnesses fully distrusted: no weighted centroid
                // exists, so nothing is learned about the subject.
                Err(OpError::AllWeightsZero) => Opinion::VACUOUS,
                Err(e) => unreachable!("nonempty witness list: {e}"),
            };
            let ideal = Opinion::ideal(network[z as usize].p_truth)
                .expect("ground-truth probabilities are in range");
            resolved.insert(
                z,
                (
                    geometric_distance(derived_base, ideal),
                    geometric_distance(derived_cand, ideal),
                    expected_distance(derived_base, ideal),
                    expected_distance(derived_cand, ideal),
                ),
            );
            connections.insert(z);
            ledger_base.insert(z, derived_base);
            ledger_cand.insert(z, derived_cand);
        }
    }

    Ok((0..n_agents)
        .filter(|z| !initially_known.contains(z))
        .map(|z| {
            let distances = resolved.get(&z);
            ExplorationRecord {
                run_id: cfg.run_id,
                pl_percent: cfg.pl_percent,
                n_bootstrap: cfg.n_bootstrap,
                exploration_idx,
                candidate: cfg.candidate,
                agent: z,
                reachable: distances.is_some(),
                d_g_baseline: distances.map(|d| d.0),
                d_g_candidate: distances.map(|d| d.1),
                d_e_baseline: distances.map(|d| d.2),
                d_e_candidate: distances.map(|d| d.3),
            }
        })
        .collect())
}
