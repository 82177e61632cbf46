use thiserror::Error;

/// Errors reported by the statistics routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StatsError {
    /// The input sample is empty.
    #[error("empty input sample")]
    EmptyInput,
    /// Paired samples have different lengths.
    #[error("paired samples differ in length: {candidate} vs {baseline}")]
    LengthMismatch { candidate: usize, baseline: usize },
    /// Not enough pairs to form any test statistic.
    #[error("no pairs to test")]
    TooFewPairs,
}
