use rand::Rng;
use std::collections::BTreeMap;

use subjective_logic::opinion::EvidenceCount;
use subjective_logic::Opinion;

use crate::network::AgentSpec;

/// The trustworthiness opinions one agent holds about others.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct KnowledgeBase {
    pub opinions: BTreeMap<u32, Opinion>,
}

impl KnowledgeBase {
    pub fn opinion_of(&self, agent: u32) -> Option<Opinion> {
        self.opinions.get(&agent).copied()
    }
}

/// Every agent runs `n_bootstrap` stateless exchanges with each of its
/// neighbors, counts truthful against lying outcomes, and forms an
/// evidence-based opinion from the counts. Agents iterate in id order
/// and neighbors in ascending order; the draw order is part of the
/// determinism contract.
pub fn bootstrap(
    network: &[AgentSpec],
    n_bootstrap: u32,
    rng: &mut impl Rng,
) -> Vec<KnowledgeBase> {
    network
        .iter()
        .map(|agent| {
            let mut kb = KnowledgeBase::default();
            for &y in &agent.neighbors {
                let p = network[y as usize].p_truth;
                let mut truthful = 0u32;
                for _ in 0..n_bootstrap {
                    if rng.random_bool(p) {
                        truthful += 1;
                    }
                }
                kb.opinions.insert(
                    y,
                    Opinion::from_evidence(EvidenceCount::new(truthful, n_bootstrap - truthful)),
                );
            }
            kb
        })
        .collect()
}
