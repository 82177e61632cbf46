use std::collections::BTreeMap;

use subjective_logic::metrics::log_ratio;
use trust_sim::ExplorationRecord;

/// Mean log-ratios of baseline over candidate distance for one agent,
/// averaged over the explorations that reached it. Positive values
/// mean the candidate pipeline landed closer on average.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AgentRatios {
    /// Mean log-ratio of the geometric distances.
    pub r_g: f64,
    /// Mean log-ratio of the expected-value distances.
    pub r_e: f64,
    /// Explorations in which the agent was reached.
    pub n_explorations: usize,
}

/// Per-agent and overall comparison values for one experiment cell.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct RatioAggregate {
    pub per_agent: BTreeMap<u32, AgentRatios>,
    /// Mean of the per-agent geometric ratios, if any agent was reached.
    pub overall_r_g: Option<f64>,
    /// Mean of the per-agent expected-value ratios, if any agent was reached.
    pub overall_r_e: Option<f64>,
}

/// Aggregates the log-ratio comparison over the records of a single
/// (run, pl, nb, candidate) cell: each reached agent contributes the
/// mean ratio over its explorations, and the overall values average
/// the agents with equal weight. Unreachable records are ignored.
pub fn aggregate_ratios(records: &[ExplorationRecord]) -> RatioAggregate {
    if let Some(first) = records.first() {
        debug_assert!(
            records.iter().all(|r| {
                (r.run_id, r.pl_percent, r.n_bootstrap, r.candidate)
                    == (
                        first.run_id,
                        first.pl_percent,
                        first.n_bootstrap,
                        first.candidate,
                    )
            }),
            "records must come from a single experiment cell"
        );
    }
    let mut sums: BTreeMap<u32, (f64, f64, usize)> = BTreeMap::new();
    for rec in records.iter().filter(|r| r.reachable) {
        let entry = sums.entry(rec.agent).or_insert((0.0, 0.0, 0));
        entry.0 += log_ratio(
            rec.d_g_candidate
                .expect("reachable records carry distances"),
            rec.d_g_baseline.expect("reachable records carry distances"),
        );
        entry.1 += log_ratio(
            rec.d_e_candidate
                .expect("reachable records carry distances"),
            rec.d_e_baseline.expect("reachable records carry distances"),
        );
        entry.2 += 1;
    }
    let per_agent: BTreeMap<u32, AgentRatios> = sums
        .into_iter()
        .map(|(agent, (g, e, n))| {
            (
                agent,
                AgentRatios {
                    r_g: g / n as f64,
                    r_e: e / n as f64,
                    n_explorations: n,
                },
            )
        })
        .collect();
    let n_agents = per_agent.len() as f64;
    let overall = |pick: fn(&AgentRatios) -> f64| {
        if per_agent.is_empty() {
            None
        } else {
            Some(per_agent.values().map(pick).sum::<f64>() / n_agents)
        }
    };
    RatioAggregate {
        overall_r_g: overall(|a| a.r_g),
        overall_r_e: overall(|a| a.r_e),
        per_agent,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use subjective_logic::graphical::DiscountVariant;

    fn reached(
        agent: u32,
        exploration_idx: u32,
        dg: (f64, f64),
        de: (f64, f64),
    ) -> ExplorationRecord {
        ExplorationRecord {
            run_id: 0,
            pl_percent: 5,
            n_bootstrap: 2,
            exploration_idx,
            candidate: DiscountVariant::G1,
            agent,
            reachable: true,
            d_g_baseline: Some(dg.0),
            d_g_candidate: Some(dg.1),
            d_e_baseline: Some(de.0),
            d_e_candidate: Some(de.1),
        }
    }

    fn missed(agent: u32, exploration_idx: u32) -> ExplorationRecord {
        ExplorationRecord {
            reachable: false,
            d_g_baseline: None,
            d_g_candidate: None,
            d_e_baseline: None,
            d_e_candidate: None,
            ..reached(agent, exploration_idx, (0.0, 0.0), (0.0, 0.0))
        }
    }

    #[test]
    fn equal_distances_give_zero_ratios() {
        let agg = aggregate_ratios(&[reached(3, 0, (0.25, 0.25), (0.1, 0.1))]);
        assert_eq!(agg.per_agent[&3].r_g, 0.0);
        assert_eq!(agg.per_agent[&3].r_e, 0.0);
        assert_eq!(agg.overall_r_g, Some(0.0));
        assert_eq!(agg.overall_r_e, Some(0.0));
    }

    #[test]
    fn opposite_ratios_cancel_within_an_agent() {
        let agg = aggregate_ratios(&[
            reached(3, 0, (0.2, 0.1), (0.2, 0.1)),
            reached(3, 1, (0.1, 0.2), (0.1, 0.2)),
        ]);
        assert_eq!(agg.per_agent[&3].n_explorations, 2);
        assert_eq!(agg.per_agent[&3].r_g, 0.0);
        assert_eq!(agg.overall_r_g, Some(0.0));
    }

    #[test]
    fn overall_values_average_the_agents_with_equal_weight() {
        // Agent 1 is reached twice with geometric ratios ln 2 and ln 8
        // (mean 2 ln 2); agent 2 once with ln 4. Overall: 2 ln 2.
        let agg = aggregate_ratios(&[
            reached(1, 0, (0.2, 0.1), (0.3, 0.3)),
            reached(1, 1, (0.8, 0.1), (0.3, 0.3)),
            reached(2, 0, (0.4, 0.1), (0.3, 0.3)),
        ]);
        assert_abs_diff_eq!(agg.per_agent[&1].r_g, 2.0 * 2.0_f64.ln(), epsilon = 1e-12);
        assert_abs_diff_eq!(agg.per_agent[&2].r_g, 4.0_f64.ln(), epsilon = 1e-12);
        assert_abs_diff_eq!(
            agg.overall_r_g.unwrap(),
            2.0 * 2.0_f64.ln(),
            epsilon = 1e-12
        );
        assert_eq!(agg.overall_r_e, Some(0.0));
    }

    #[test]
    fn unreachable_records_are_ignored() {
        let agg = aggregate_ratios(&[
            missed(1, 0),
            reached(2, 0, (0.3, 0.3), (0.2, 0.2)),
            missed(2, 1),
        ]);
        assert!(!agg.per_agent.contains_key(&1));
        assert_eq!(agg.per_agent[&2].n_explorations, 1);
    }

    #[test]
    fn no_reachable_records_leave_the_overall_means_empty() {
        let agg = aggregate_ratios(&[missed(1, 0), missed(2, 0)]);
        assert!(agg.per_agent.is_empty());
        assert_eq!(agg.overall_r_g, None);
        assert_eq!(agg.overall_r_e, None);
        assert_eq!(aggregate_ratios(&[]), RatioAggregate::default());
    }
}
