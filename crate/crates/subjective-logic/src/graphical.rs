//! Projection-based discount operators and weighted-centroid fusion.
//!
//! The graphical discounts move the trust opinion T toward the D–U
//! edge of the triangle: the conclusion C contributes a direction
//! (through its angle at the belief vertex) and a fraction of the
//! available distance (through how far C itself sits from that
//! vertex). All results stay in the admissible space of T, the set of
//! opinions whose belief does not exceed T's.

use serde::{Deserialize, Serialize};
use std::f64::consts::{FRAC_PI_2, FRAC_PI_3};
use std::fmt;
use std::str::FromStr;

use crate::error::OpError;
use crate::geometry::{angles_of, radial_fraction, COS_60, SIN_60, SQRT_3};
use crate::opinion::Opinion;

/// Half-width of the window that selects a special-case branch of the
/// |TM| formula by angle.
pub const ANGLE_BRANCH_TOLERANCE: f64 = 1e-12;

/// The discount operators under study: the mass-shuffling baseline
/// variant and the three members of the projection family, which
/// differ only in how they select the projection direction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DiscountVariant {
    Naive,
    G1,
    G2,
    G3,
}

impl DiscountVariant {
    pub const ALL: [DiscountVariant; 4] = [
        DiscountVariant::Naive,
        DiscountVariant::G1,
        DiscountVariant::G2,
        DiscountVariant::G3,
    ];

    pub fn as_tag(self) -> &'static str {
        match self {
            DiscountVariant::Naive => "naive",
            DiscountVariant::G1 => "g1",
            DiscountVariant::G2 => "g2",
            DiscountVariant::G3 => "g3",
        }
    }
}

impl fmt::Display for DiscountVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_tag())
    }
}

impl FromStr for DiscountVariant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "naive" => Ok(DiscountVariant::Naive),
            "g1" => Ok(DiscountVariant::G1),
            "g2" => Ok(DiscountVariant::G2),
            "g3" => Ok(DiscountVariant::G3),
            other => Err(format!(
                "unknown discount variant '{other}' (expected naive, g1, g2, or g3)"
            )),
        }
    }
}

/// An opinion paired with its fusion weight K ≥ 0; the simulator uses
/// the expected value of the trust opinion the item was derived
/// through.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WeightedOpinion {
    pub opinion: Opinion,
    pub weight: f64,
}

/// Discounts `c` by the trust opinion `t`, scaling `t` by the
/// conclusion's belief and absorbing the rest of the conclusion's mass
/// directly: b = b_c·b_t, d = b_c·d_t + d_c, u = b_c·u_t + u_c. A
/// certain conclusion (d_c = 1) therefore passes through undiscounted.
pub fn discount_naive(t: Opinion, c: Opinion) -> Opinion {
    Opinion::new(
        c.belief * t.belief,
        c.belief * t.disbelief + c.disbelief,
        c.belief * t.uncertainty + c.uncertainty,
    )
    .expect("discounted masses stay on the simplex")
}

/// The projection direction a graphical variant assigns to a
/// conclusion whose belief-vertex angle is `alpha_c`, given the trust
/// opinion's angles `beta_t` and `epsilon_t`. All three variants map
/// the admissible range [0, π/3] of `alpha_c` linearly into (a part
/// of) the band [α_c·ε_t/(π/3) − β_t, ε_t − β_t].
///
/// # Panics
///
/// Panics on [`DiscountVariant::Naive`], which has no projection
/// direction.
pub fn alpha_prime(variant: DiscountVariant, alpha_c: f64, beta_t: f64, epsilon_t: f64) -> f64 {
    match variant {
        DiscountVariant::Naive => {
            panic!("the naive variant does not define a projection direction")
        }
        DiscountVariant::G1 => alpha_c * epsilon_t / FRAC_PI_3 - beta_t,
        DiscountVariant::G2 => alpha_c * (epsilon_t - beta_t) / FRAC_PI_3,
        DiscountVariant::G3 => alpha_c * (epsilon_t / 2.0) / FRAC_PI_3 + epsilon_t / 2.0 - beta_t,
    }
}

/// Distance from the trust opinion's point to the D–U line along the
/// direction `alpha`. The three special angles come first because the
/// general formula degenerates there: at −π/3 and 2π/3 the ray runs
/// parallel to the D–U line (those values are the exit distances along
/// the d–u edge and the y = 1 line instead), and at π/2 the listed
/// value is exact.
fn tm_length(alpha: f64, t: Opinion) -> f64 {
    if (alpha - FRAC_PI_2).abs() < ANGLE_BRANCH_TOLERANCE {
        2.0 * t.belief
    } else if (alpha + FRAC_PI_3).abs() < ANGLE_BRANCH_TOLERANCE {
        2.0 / SQRT_3 * t.uncertainty
    } else if (alpha - 2.0 * FRAC_PI_3).abs() < ANGLE_BRANCH_TOLERANCE {
        2.0 / SQRT_3 * (1.0 - t.uncertainty)
    } else {
        // 2√(tan²α + 1)/|tan α + √3|·b_t, rewritten through sin/cos so
        // that it stays finite across α = π/2.
        2.0 * t.belief / (alpha.sin() + SQRT_3 * alpha.cos()).abs()
    }
}

/// Discounts `c` by the trust opinion `t` using one of the projection
/// variants: starting from `t`'s point, move by r_c·|TM| in direction
/// α′, where r_c is the conclusion's radial fraction and |TM| the
/// distance to the admissible-space boundary in that direction.
///
/// # Panics
///
/// Panics on [`DiscountVariant::Naive`]; use [`discount`] to dispatch
/// over all variants.
pub fn discount_graphical(t: Opinion, c: Opinion, variant: DiscountVariant) -> Opinion {
    let ta = angles_of(t);
    let alpha_c = angles_of(c).alpha;
    let alpha = alpha_prime(variant, alpha_c, ta.beta, ta.epsilon);
    let band_lo = alpha_c * ta.epsilon / FRAC_PI_3 - ta.beta;
    let band_hi = ta.epsilon - ta.beta;
    debug_assert!(
        band_lo <= band_hi + ANGLE_BRANCH_TOLERANCE
            && alpha >= band_lo - ANGLE_BRANCH_TOLERANCE
            && alpha <= band_hi + ANGLE_BRANCH_TOLERANCE,
        "projection direction {alpha} outside band [{band_lo}, {band_hi}]"
    );
    let tc = radial_fraction(c) * tm_length(alpha, t);
    let u_raw = t.uncertainty + alpha.sin() * tc;
    let d_raw = t.disbelief + (t.uncertainty - u_raw) * COS_60 + alpha.cos() * SIN_60 * tc;
    // The result is an opinion up to rounding; pin stray epsilons back
    // into range and let the remainder become belief.
    let u = u_raw.clamp(0.0, 1.0);
    let d = d_raw.clamp(0.0, 1.0);
    let b = (1.0 - d - u).max(0.0);
    Opinion::new(b, d, u).expect("projected masses stay on the simplex")
}

/// Discounts `c` by `t` with any variant, dispatching between the
/// mass-shuffling and projection forms.
pub fn discount(t: Opinion, c: Opinion, variant: DiscountVariant) -> Opinion {
    match variant {
        DiscountVariant::Naive => discount_naive(t, c),
        _ => discount_graphical(t, c, variant),
    }
}

/// Fuses opinions as their weighted centroid: each component is
/// Σ K_i·x_i / Σ K_i. Zero-weight items contribute exactly nothing, so
/// dropping them leaves the result bit-identical.
pub fn fuse_weighted(items: &[WeightedOpinion]) -> Result<Opinion, OpError> {
    if items.is_empty() {
        return Err(OpError::EmptyInput);
    }
    let mut total = 0.0;
    let (mut b, mut d, mut u) = (0.0, 0.0, 0.0);
    for item in items {
        debug_assert!(item.weight >= 0.0, "fusion weights must be nonnegative");
        total += item.weight;
        b += item.weight * item.opinion.belief;
        d += item.weight * item.opinion.disbelief;
        u += item.weight * item.opinion.uncertainty;
    }
    if total <= 0.0 {
        return Err(OpError::AllWeightsZero);
    }
    Ok(Opinion::new(b / total, d / total, u / total)
        .expect("weighted means of simplex points stay on the simplex"))
}
