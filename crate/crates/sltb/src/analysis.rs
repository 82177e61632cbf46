use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

use sim_stats::{aggregate_ratios, histogram, wilcoxon_signed_rank, HistogramBin, WilcoxonSummary};
use subjective_logic::graphical::DiscountVariant;
use trust_sim::ExplorationRecord;

/// Identifies one grid cell: (run, connection probability, bootstrap
/// count, candidate operator).
type CellKey = (u32, u32, u32, DiscountVariant);

/// A cell's overall log-ratios, (key, r_G, r_E), when defined.
type CellRatios = (CellKey, Option<f64>, Option<f64>);

/// Bins used for every exported distance histogram.
pub const HISTOGRAM_BINS: usize = 50;

/// Paired comparison of one candidate operator against the baseline
/// pipeline, for both distance metrics.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CandidateSummary {
    /// Reachable (candidate, baseline) distance pairs entering the tests.
    pub n_pairs: usize,
    /// Signed-rank comparison of the geometric distances.
    pub d_g: WilcoxonSummary,
    /// Signed-rank comparison of the expected-value distances.
    pub d_e: WilcoxonSummary,
}

/// One row of the aggregate table: the mean and sample standard
/// deviation of the per-cell overall log-ratios, marginalized onto one
/// grid axis.
#[derive(Debug, Clone, PartialEq)]
pub struct AggregateRow {
    pub axis: &'static str,
    pub axis_value: u32,
    pub candidate: DiscountVariant,
    pub metric: &'static str,
    pub mean: Option<f64>,
    pub stddev: Option<f64>,
}

fn candidates_present(records: &[ExplorationRecord]) -> Vec<DiscountVariant> {
    DiscountVariant::ALL
        .into_iter()
        .filter(|v| records.iter().any(|r| r.candidate == *v))
        .collect()
}

/// Wilcoxon comparison per candidate over every reachable record.
/// Candidates without a single reachable record are omitted.
pub fn build_summary(records: &[ExplorationRecord]) -> BTreeMap<String, CandidateSummary> {
    let mut summary = BTreeMap::new();
    for candidate in candidates_present(records) {
        let reached: Vec<&ExplorationRecord> = records
            .iter()
            .filter(|r| r.candidate == candidate && r.reachable)
            .collect();
        if reached.is_empty() {
            continue;
        }
        let pick = |f: fn(&ExplorationRecord) -> Option<f64>| -> Vec<f64> {
            reached
                .iter()
                .map(|r| f(r).expect("reachable records carry distances"))
                .collect()
        };
        let d_g = wilcoxon_signed_rank(&pick(|r| r.d_g_candidate), &pick(|r| r.d_g_baseline))
            .expect("paired nonempty samples");
        let d_e = wilcoxon_signed_rank(&pick(|r| r.d_e_candidate), &pick(|r| r.d_e_baseline))
            .expect("paired nonempty samples");
        summary.insert(
            candidate.as_tag().to_owned(),
            CandidateSummary {
                n_pairs: reached.len(),
                d_g,
                d_e,
            },
        );
    }
    summary
}

fn mean_and_stddev(values: &[f64]) -> (Option<f64>, Option<f64>) {
    if values.is_empty() {
        return (None, None);
    }
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    let stddev = if values.len() < 2 {
        0.0
    } else {
        (values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / (n - 1.0)).sqrt()
    };
    (Some(mean), Some(stddev))
}

/// Marginalizes the per-cell overall log-ratios onto the connection
/// probability axis and then the bootstrap axis: one row per
/// (axis value, candidate, metric), averaging over runs and the other
/// axis. Cells whose explorations reached nobody contribute nothing.
pub fn build_aggregates(records: &[ExplorationRecord]) -> Vec<AggregateRow> {
    let mut cells: BTreeMap<CellKey, Vec<ExplorationRecord>> = BTreeMap::new();
    for rec in records {
        cells
            .entry((rec.run_id, rec.pl_percent, rec.n_bootstrap, rec.candidate))
            .or_default()
            .push(*rec);
    }
    let ratios: Vec<CellRatios> = cells
        .iter()
        .map(|(key, cell)| {
            let agg = aggregate_ratios(cell);
            (*key, agg.overall_r_g, agg.overall_r_e)
        })
        .collect();

    let candidates = candidates_present(records);
    let mut rows = Vec::new();
    for (axis, pick_axis) in [
        ("pl", (|key| key.1) as fn(&CellKey) -> u32),
        ("nb", |key| key.2),
    ] {
        let mut axis_values: Vec<u32> = ratios.iter().map(|(key, _, _)| pick_axis(key)).collect();
        axis_values.sort_unstable();
        axis_values.dedup();
        for axis_value in axis_values {
            for &candidate in &candidates {
                for (metric, pick_ratio) in [
                    ("rG", (|r: &CellRatios| r.1) as fn(&_) -> Option<f64>),
                    ("rE", |r| r.2),
                ] {
                    let values: Vec<f64> = ratios
                        .iter()
                        .filter(|(key, _, _)| pick_axis(key) == axis_value && key.3 == candidate)
                        .filter_map(pick_ratio)
                        .collect();
                    let (mean, stddev) = mean_and_stddev(&values);
                    rows.push(AggregateRow {
                        axis,
                        axis_value,
                        candidate,
                        metric,
                        mean,
                        stddev,
                    });
                }
            }
        }
    }
    rows
}

/// Distance histograms for export: the baseline pipeline once (tagged
/// "josang", taken from the first candidate present since the baseline
/// columns are identical across candidates), then each candidate, for
/// both metrics. Returns (file tag, bins) pairs; empty samples are
/// skipped.
pub fn build_histograms(records: &[ExplorationRecord]) -> Vec<(String, Vec<HistogramBin>)> {
    let candidates = candidates_present(records);
    let mut jobs: Vec<(String, Vec<f64>)> = Vec::new();
    if let Some(&first) = candidates.first() {
        for (metric, pick) in [
            (
                "dG",
                (|r: &ExplorationRecord| r.d_g_baseline) as fn(&ExplorationRecord) -> Option<f64>,
            ),
            ("dE", |r| r.d_e_baseline),
        ] {
            let values: Vec<f64> = records
                .iter()
                .filter(|r| r.candidate == first)
                .filter_map(pick)
                .collect();
            jobs.push((format!("hist_josang_{metric}.csv"), values));
        }
    }
    for candidate in candidates {
        for (metric, pick) in [
            (
                "dG",
                (|r: &ExplorationRecord| r.d_g_candidate) as fn(&ExplorationRecord) -> Option<f64>,
            ),
            ("dE", |r| r.d_e_candidate),
        ] {
            let values: Vec<f64> = records
                .iter()
                .filter(|r| r.candidate == candidate)
                .filter_map(pick)
                .collect();
            jobs.push((format!("hist_{}_{metric}.csv", candidate.as_tag()), values));
        }
    }
    jobs.into_iter()
        .filter(|(_, values)| !values.is_empty())
        .map(|(name, values)| {
            let bins = histogram(&values, HISTOGRAM_BINS).expect("nonempty sample");
            (name, bins)
        })
        .collect()
}
