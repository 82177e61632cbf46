use serde::{Deserialize, Serialize};
use statrs::distribution::{ContinuousCDF, Normal};

use crate::descriptive::median;
use crate::error::StatsError;

/// Largest effective sample size for which the two-sided p-value is
/// computed by exact enumeration of the signed-rank distribution; the
/// tie-corrected normal approximation is used above it.
pub const EXACT_ENUMERATION_MAX: usize = 12;

/// Result of a paired Wilcoxon signed-rank comparison of candidate
/// against baseline distances.
///
/// Differences are taken baseline minus candidate, so `s_plus`
/// accumulates the ranks of pairs where the candidate is closer and a
/// positive `increment` means the candidate outperformed the baseline.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WilcoxonSummary {
    /// Pairs remaining after zero differences are dropped.
    pub n_effective: usize,
    /// Rank sum of pairs with positive difference (candidate closer).
    pub s_plus: f64,
    /// Rank sum of pairs with negative difference (baseline closer).
    pub s_minus: f64,
    /// Normal deviate of min(s_plus, s_minus); zero or negative.
    pub z: f64,
    /// Two-sided p-value.
    pub p_two_sided: f64,
    /// Median of the full candidate sample.
    pub median_candidate: f64,
    /// Median of the full baseline sample.
    pub median_baseline: f64,
    /// (s_plus - s_minus) / (s_plus + s_minus), in [-1, 1].
    pub increment: f64,
}

/// Exact two-sided tail probability of the signed-rank statistic via
/// dynamic programming over doubled ranks (average ranks are half
/// integers, so doubling makes every rank integral).
fn exact_two_sided_p(ranks: &[f64], w: f64) -> f64 {
    let doubled: Vec<usize> = ranks.iter().map(|r| (2.0 * r).round() as usize).collect();
    let total: usize = doubled.iter().sum();
    let mut counts = vec![0.0_f64; total + 1];
    counts[0] = 1.0;
    let mut reach = 0;
    for &r in &doubled {
        reach += r;
        for k in (r..=reach).rev() {
            counts[k] += counts[k - r];
        }
    }
    let w_doubled = ((2.0 * w).round() as usize).min(total);
    let tail: f64 = counts[..=w_doubled].iter().sum();
    (2.0 * tail / 2.0_f64.powi(ranks.len() as i32)).min(1.0)
}

/// Paired Wilcoxon signed-rank test of candidate against baseline.
///
/// Zero differences are dropped; ties among the absolute differences
/// receive average ranks and the normal variance is tie-corrected. The
/// p-value is exact for up to [`EXACT_ENUMERATION_MAX`] effective
/// pairs and a two-sided normal tail beyond that. When every pair is
/// tied the test degenerates to the no-evidence summary (z = 0, p = 1,
/// increment = 0). Medians always describe the full input samples.
pub fn wilcoxon_signed_rank(
    candidate: &[f64],
    baseline: &[f64],
) -> Result<WilcoxonSummary, StatsError> {
    if candidate.len() != baseline.len() {
        return Err(StatsError::LengthMismatch {
            candidate: candidate.len(),
            baseline: baseline.len(),
        });
    }
    if candidate.is_empty() {
        return Err(StatsError::TooFewPairs);
    }
    let median_candidate = median(candidate).expect("candidate sample is nonempty");
    let median_baseline = median(baseline).expect("baseline sample is nonempty");

    let diffs: Vec<f64> = baseline
        .iter()
        .zip(candidate)
        .map(|(b, c)| b - c)
        .filter(|d| *d != 0.0)
        .collect();
    let n = diffs.len();
    if n == 0 {
        return Ok(WilcoxonSummary {
            n_effective: 0,
            s_plus: 0.0,
            s_minus: 0.0,
            z: 0.0,
            p_two_sided: 1.0,
            median_candidate,
            median_baseline,
            increment: 0.0,
        });
    }

    let abs: Vec<f64> = diffs.iter().map(|d| d.abs()).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| abs[i].total_cmp(&abs[j]));
    let mut ranks = vec![0.0; n];
    let mut tie_correction = 0.0;
    let mut i = 0;
    while i < n {
        let mut j = i;
        while j < n && abs[order[j]] == abs[order[i]] {
            j += 1;
        }
        // Positions i..j (0-based) share ranks i+1..=j; assign their mean.
        let avg = (i + 1 + j) as f64 / 2.0;
        for &idx in &order[i..j] {
            ranks[idx] = avg;
        }
        let t = (j - i) as f64;
        tie_correction += t * t * t - t;
        i = j;
    }

    let s_plus: f64 = diffs
        .iter()
        .zip(&ranks)
        .filter(|(d, _)| **d > 0.0)
        .map(|(_, r)| r)
        .sum();
    let s_minus: f64 = diffs
        .iter()
        .zip(&ranks)
        .filter(|(d, _)| **d < 0.0)
        .map(|(_, r)| r)
        .sum();

    let nf = n as f64;
    let mean = nf * (nf + 1.0) / 4.0;
    // Tie-corrected variance; a single all-tied group still leaves
    // n(n+1)^2/16 > 0, so sigma never vanishes for n >= 1.
    let variance = nf * (nf + 1.0) * (2.0 * nf + 1.0) / 24.0 - tie_correction / 48.0;
    let w = s_plus.min(s_minus);
    let z = (w - mean) / variance.sqrt();
    let p_two_sided = if n <= EXACT_ENUMERATION_MAX {
        exact_two_sided_p(&ranks, w)
    } else {
        let normal = Normal::new(0.0, 1.0).expect("unit normal parameters are valid");
        (2.0 * normal.cdf(z)).min(1.0)
    };

    Ok(WilcoxonSummary {
        n_effective: n,
        s_plus,
        s_minus,
        z,
        p_two_sided,
        median_candidate,
        median_baseline,
        increment: (s_plus - s_minus) / (s_plus + s_minus),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn identical_samples_degenerate_to_no_evidence() {
        let xs = [0.4, 0.1, 0.9];
        let summary = wilcoxon_signed_rank(&xs, &xs).unwrap();
        assert_eq!(summary.n_effective, 0);
        assert_eq!(summary.s_plus, 0.0);
        assert_eq!(summary.s_minus, 0.0);
        assert_eq!(summary.z, 0.0);
        assert_eq!(summary.p_two_sided, 1.0);
        assert_eq!(summary.increment, 0.0);
        assert_eq!(summary.median_candidate, 0.4);
        assert_eq!(summary.median_baseline, 0.4);
    }

    #[test]
    fn uniformly_closer_candidate_takes_the_whole_rank_sum() {
        let candidate = [1.0, 2.0, 3.0];
        let baseline = [2.0, 3.0, 4.0];
        let summary = wilcoxon_signed_rank(&candidate, &baseline).unwrap();
        assert_eq!(summary.n_effective, 3);
        assert_eq!(summary.s_plus, 6.0);
        assert_eq!(summary.s_minus, 0.0);
        assert_eq!(summary.increment, 1.0);
        assert_eq!(summary.median_candidate, 2.0);
        assert_eq!(summary.median_baseline, 3.0);
        // All three equal differences form one tie group:
        // sigma^2 = 3*4*7/24 - (27-3)/48 = 3.
        assert_abs_diff_eq!(summary.z, -3.0 / 3.0_f64.sqrt(), epsilon = 1e-15);
        // Enumeration over the 8 sign patterns: W <= 0 only for the
        // all-minus pattern, so p = 2/8.
        assert_eq!(summary.p_two_sided, 0.25);
    }

    #[test]
    fn tied_magnitudes_share_average_ranks() {
        let candidate = [0.0, 0.0, 0.0, 0.0];
        let baseline = [1.0, 1.0, 2.0, 2.0];
        let summary = wilcoxon_signed_rank(&candidate, &baseline).unwrap();
        assert_eq!(summary.s_plus, 10.0);
        assert_eq!(summary.s_minus, 0.0);
        // Two tie pairs: sigma^2 = 4*5*9/24 - 12/48 = 7.25.
        assert_abs_diff_eq!(summary.z, -5.0 / 7.25_f64.sqrt(), epsilon = 1e-15);
        assert_eq!(summary.p_two_sided, 0.125);
    }

    #[test]
    fn zero_differences_are_dropped_but_medians_keep_the_full_sample() {
        let candidate = [0.5, 0.2, 0.9, 0.9];
        let baseline = [0.5, 0.4, 0.9, 1.0];
        let summary = wilcoxon_signed_rank(&candidate, &baseline).unwrap();
        assert_eq!(summary.n_effective, 2);
        assert_eq!(summary.increment, 1.0);
        assert_eq!(summary.median_candidate, 0.7);
        assert_eq!(summary.median_baseline, 0.7);
    }

    #[test]
    fn shifting_both_samples_changes_nothing_but_the_medians() {
        // Dyadic values keep the pairwise differences bit-identical
        // under the shift, which is what the invariance is about.
        let candidate = [0.25, 1.5, 0.75, 2.0, 0.5, 1.25];
        let baseline = [0.5, 1.0, 0.75, 2.25, 1.5, 0.25];
        let plain = wilcoxon_signed_rank(&candidate, &baseline).unwrap();
        let shifted_c: Vec<f64> = candidate.iter().map(|x| x + 7.5).collect();
        let shifted_b: Vec<f64> = baseline.iter().map(|x| x + 7.5).collect();
        let shifted = wilcoxon_signed_rank(&shifted_c, &shifted_b).unwrap();
        assert_eq!(plain.n_effective, shifted.n_effective);
        assert_eq!(plain.s_plus, shifted.s_plus);
        assert_eq!(plain.s_minus, shifted.s_minus);
        assert_eq!(plain.z, shifted.z);
        assert_eq!(plain.p_two_sided, shifted.p_two_sided);
        assert_eq!(plain.increment, shifted.increment);
        assert_abs_diff_eq!(
            shifted.median_candidate,
            plain.median_candidate + 7.5,
            epsilon = 1e-12
        );
    }

    #[test]
    fn swapping_the_samples_mirrors_the_summary() {
        let candidate = [0.11, 0.52, 0.48, 0.9, 0.33, 0.6, 0.2];
        let baseline = [0.4, 0.5, 0.5, 0.7, 0.35, 0.61, 0.2];
        let forward = wilcoxon_signed_rank(&candidate, &baseline).unwrap();
        let reverse = wilcoxon_signed_rank(&baseline, &candidate).unwrap();
        assert_eq!(forward.s_plus, reverse.s_minus);
        assert_eq!(forward.s_minus, reverse.s_plus);
        assert_eq!(forward.increment, -reverse.increment);
        assert_eq!(forward.z, reverse.z);
        assert_eq!(forward.p_two_sided, reverse.p_two_sided);
        assert_eq!(forward.median_candidate, reverse.median_baseline);
    }

    #[test]
    fn rank_sums_split_the_triangular_total() {
        let candidate = [0.25, 0.5, 0.5, 0.75, 0.1, 0.6, 0.35, 0.9];
        let baseline = [0.5, 0.25, 0.75, 0.5, 0.6, 0.1, 0.35, 0.95];
        let summary = wilcoxon_signed_rank(&candidate, &baseline).unwrap();
        let n = summary.n_effective as f64;
        assert_abs_diff_eq!(
            summary.s_plus + summary.s_minus,
            n * (n + 1.0) / 2.0,
            epsilon = 1e-6
        );
        assert!(summary.increment > -1.0 && summary.increment < 1.0);
        assert!(summary.z <= 0.0);
    }

    #[test]
    fn large_samples_use_the_normal_tail() {
        let candidate: Vec<f64> = (0..200).map(|i| f64::from(i) * 0.01).collect();
        let baseline: Vec<f64> = candidate.iter().map(|x| x + 0.005).collect();
        let summary = wilcoxon_signed_rank(&candidate, &baseline).unwrap();
        assert_eq!(summary.n_effective, 200);
        assert_eq!(summary.increment, 1.0);
        let normal = Normal::new(0.0, 1.0).unwrap();
        assert_eq!(summary.p_two_sided, (2.0 * normal.cdf(summary.z)).min(1.0));
        assert!(summary.p_two_sided < 1e-10);
    }

    #[test]
    fn mismatched_lengths_are_rejected() {
        assert_eq!(
            wilcoxon_signed_rank(&[1.0], &[1.0, 2.0]),
            Err(StatsError::LengthMismatch {
                candidate: 1,
                baseline: 2
            })
        );
    }

    #[test]
    fn empty_samples_are_rejected() {
        assert_eq!(wilcoxon_signed_rank(&[], &[]), Err(StatsError::TooFewPairs));
    }

    #[test]
    fn summary_serializes_to_json_and_back() {
        let summary = wilcoxon_signed_rank(&[1.0, 2.0, 3.0], &[2.0, 3.0, 4.0]).unwrap();
        let json = serde_json::to_string(&summary).unwrap();
        let back: WilcoxonSummary = serde_json::from_str(&json).unwrap();
        assert_eq!(summary, back);
    }
}
