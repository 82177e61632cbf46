//! Binary subjective-logic opinions and a trust calculus over them.
//!
//! An [`Opinion`] is a point ⟨belief, disbelief, uncertainty⟩ on the
//! 2-simplex with the base rate fixed at ½. The crate provides:
//!
//! - [`josang`]: the classic uncertainty-favouring discount and
//!   cumulative consensus, used as the experimental baseline;
//! - [`graphical`]: a naïve discount, a family of geometric discounts
//!   defined through the planar opinion triangle, and weighted-average
//!   fusion;
//! - [`geometry`]: the planar embedding of the opinion triangle and the
//!   characteristic angles the geometric discounts are built from;
//! - [`metrics`]: distances between opinions and the logarithmic
//!   comparison ratio of two such distances.
//!
//! All operations are pure functions over immutable values and are safe
//! to call concurrently.

pub mod error;
pub mod geometry;
pub mod graphical;
pub mod josang;
pub mod metrics;
pub mod opinion;

pub use error::OpError;
pub use graphical::{DiscountVariant, WeightedOpinion};
pub use opinion::{EvidenceCount, Opinion};

/// Crate version, embedded in experiment manifests.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
