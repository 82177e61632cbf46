//! Nonparametric comparison of paired distance samples: medians,
//! Wilcoxon signed-rank testing, per-agent log-ratio aggregation, and
//! histogram binning. All functions are pure and safe to call
//! concurrently.

pub mod descriptive;
pub mod error;
pub mod ratios;
pub mod wilcoxon;

pub use descriptive::{histogram, median, HistogramBin};
pub use error::StatsError;
pub use ratios::{aggregate_ratios, AgentRatios, RatioAggregate};
pub use wilcoxon::{wilcoxon_signed_rank, WilcoxonSummary, EXACT_ENUMERATION_MAX};
