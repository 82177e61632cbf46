use crate::error::StatsError;

/// Sample median: the middle order statistic, or the mean of the two
/// central order statistics for even-length input.
pub fn median(values: &[f64]) -> Result<f64, StatsError> {
    if values.is_empty() {
        return Err(StatsError::EmptyInput);
    }
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    let mid = sorted.len() / 2;
    if sorted.len() % 2 == 1 {
        Ok(sorted[mid])
    } else {
        Ok(0.5 * (sorted[mid - 1] + sorted[mid]))
    }
}

/// One histogram bin: (lower edge, upper edge, count).
pub type HistogramBin = (f64, f64, usize);

/// Equal-width histogram over [min, max]. Counts sum to the sample
/// size; values on an interior bin edge fall into the upper bin and
/// the maximum falls into the last bin. A constant sample collapses to
/// a single zero-width bin regardless of `n_bins`.
pub fn histogram(values: &[f64], n_bins: usize) -> Result<Vec<HistogramBin>, StatsError> {
    assert!(n_bins >= 1, "a histogram needs at least one bin");
    if values.is_empty() {
        return Err(StatsError::EmptyInput);
    }
    let min = values.iter().copied().fold(f64::INFINITY, f64::min);
    let max = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if min == max {
        return Ok(vec![(min, max, values.len())]);
    }
    let edge = |i: usize| min + (max - min) * (i as f64) / (n_bins as f64);
    let mut bins: Vec<HistogramBin> = (0..n_bins)
        .map(|i| (edge(i), if i + 1 == n_bins { max } else { edge(i + 1) }, 0))
        .collect();
    for &v in values {
        let idx = (((v - min) / (max - min)) * n_bins as f64) as usize;
        bins[idx.min(n_bins - 1)].2 += 1;
    }
    Ok(bins)
}
