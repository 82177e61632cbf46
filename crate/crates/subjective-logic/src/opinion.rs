use serde::{Deserialize, Serialize};

use crate::error::OpError;

/// Tolerance for the simplex constraint b + d + u = 1. Every operator
/// here is closed-form in double precision, so accumulated error across
/// a discount-plus-fusion chain stays orders of magnitude below this.
pub const SIMPLEX_TOLERANCE: f64 = 1e-9;

/// A binary opinion ⟨belief, disbelief, uncertainty⟩ on the 2-simplex.
///
/// The base rate is fixed at ½ and is not stored; supporting any other
/// base rate is a deliberate breaking change. All three components are
/// stored explicitly so a violated simplex constraint is detectable
/// rather than silently normalized away.
///
/// Serializes as `{"b": …, "d": …, "u": …}`; deserialization validates.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawOpinion")]
pub struct Opinion {
    #[serde(rename = "b")]
    pub belief: f64,
    #[serde(rename = "d")]
    pub disbelief: f64,
    #[serde(rename = "u")]
    pub uncertainty: f64,
}

#[derive(Deserialize)]
struct RawOpinion {
    b: f64,
    d: f64,
    u: f64,
}

impl TryFrom<RawOpinion> for Opinion {
    type Error = OpError;

    fn try_from(raw: RawOpinion) -> Result<Self, OpError> {
        Opinion::new(raw.b, raw.d, raw.u)
    }
}

impl Opinion {
    pub const FULL_BELIEF: Opinion = Opinion {
        belief: 1.0,
        disbelief: 0.0,
        uncertainty: 0.0,
    };
    pub const FULL_DISBELIEF: Opinion = Opinion {
        belief: 0.0,
        disbelief: 1.0,
        uncertainty: 0.0,
    };
    /// The fully uncertain opinion, neutral under consensus.
    pub const VACUOUS: Opinion = Opinion {
        belief: 0.0,
        disbelief: 0.0,
        uncertainty: 1.0,
    };

    /// Validates the simplex constraint and clamps components that are
    /// within [`SIMPLEX_TOLERANCE`] of the [0, 1] bounds onto them.
    /// Non-finite components are rejected.
    pub fn new(belief: f64, disbelief: f64, uncertainty: f64) -> Result<Opinion, OpError> {
        let err = OpError::SimplexViolation {
            b: belief,
            d: disbelief,
            u: uncertainty,
        };
        let in_range = |x: f64| (-SIMPLEX_TOLERANCE..=1.0 + SIMPLEX_TOLERANCE).contains(&x);
        if !(in_range(belief) && in_range(disbelief) && in_range(uncertainty)) {
            return Err(err);
        }
        if (belief + disbelief + uncertainty - 1.0).abs() > SIMPLEX_TOLERANCE {
            return Err(err);
        }
        Ok(Opinion {
            belief: belief.clamp(0.0, 1.0),
            disbelief: disbelief.clamp(0.0, 1.0),
            uncertainty: uncertainty.clamp(0.0, 1.0),
        })
    }

    /// Expected probability b + u/2 (the base rate ½ weights the
    /// uncertainty mass).
    pub fn expected_value(self) -> f64 {
        self.belief + 0.5 * self.uncertainty
    }

    /// The evidence mapping ⟨p/(p+n+2), n/(p+n+2), 2/(p+n+2)⟩: the
    /// uncertainty is exactly 2/(total+2) and only vanishes in the
    /// infinite-evidence limit.
    pub fn from_evidence(evidence: EvidenceCount) -> Opinion {
        let total = f64::from(evidence.positive) + f64::from(evidence.negative) + 2.0;
        Opinion {
            belief: f64::from(evidence.positive) / total,
            disbelief: f64::from(evidence.negative) / total,
            uncertainty: 2.0 / total,
        }
    }

    /// The zero-uncertainty opinion ⟨p, 1−p, 0⟩ an omniscient observer
    /// would hold about a source that tells the truth with probability p.
    pub fn ideal(p: f64) -> Result<Opinion, OpError> {
        if !(0.0..=1.0).contains(&p) {
            return Err(OpError::DomainError {
                name: "p",
                value: p,
                lo: 0.0,
                hi: 1.0,
            });
        }
        Ok(Opinion {
            belief: p,
            disbelief: 1.0 - p,
            uncertainty: 0.0,
        })
    }
}

/// Outcome counts of repeated verifiable exchanges with one source.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvidenceCount {
    /// Truthful exchanges observed.
    pub positive: u32,
    /// Lies observed.
    pub negative: u32,
}

impl EvidenceCount {
    pub fn new(positive: u32, negative: u32) -> EvidenceCount {
        EvidenceCount { positive, negative }
    }

    pub fn total(self) -> u32 {
        self.positive + self.negative
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn vertices_and_interior_points_construct() {
        assert_eq!(Opinion::new(1.0, 0.0, 0.0).unwrap(), Opinion::FULL_BELIEF);
        let o = Opinion::new(0.6, 0.2, 0.2).unwrap();
        assert_eq!((o.belief, o.disbelief, o.uncertainty), (0.6, 0.2, 0.2));
    }

    #[test]
    fn off_simplex_sum_is_rejected() {
        assert_eq!(
            Opinion::new(0.5, 0.4, 0.2),
            Err(OpError::SimplexViolation {
                b: 0.5,
                d: 0.4,
                u: 0.2
            })
        );
    }

    #[test]
    fn out_of_range_component_is_rejected() {
        assert!(Opinion::new(1.2, -0.2, 0.0).is_err());
        assert!(Opinion::new(f64::NAN, 0.5, 0.5).is_err());
        assert!(Opinion::new(f64::INFINITY, 0.0, 0.0).is_err());
    }

    #[test]
    fn near_boundary_components_clamp_onto_bounds() {
        let o = Opinion::new(1.0 + 5e-10, -5e-10, 0.0).unwrap();
        assert_eq!((o.belief, o.disbelief, o.uncertainty), (1.0, 0.0, 0.0));
    }

    #[test]
    fn expected_value_matches_hand_computation() {
        assert_eq!(Opinion::FULL_BELIEF.expected_value(), 1.0);
        assert_eq!(Opinion::VACUOUS.expected_value(), 0.5);
        assert_relative_eq!(
            Opinion::new(0.6, 0.2, 0.2).unwrap().expected_value(),
            0.7,
            epsilon = 1e-15
        );
    }

    #[test]
    fn evidence_mapping_matches_hand_computation() {
        assert_eq!(
            Opinion::from_evidence(EvidenceCount::new(0, 0)),
            Opinion::VACUOUS
        );
        let o = Opinion::from_evidence(EvidenceCount::new(8, 0));
        assert_relative_eq!(o.belief, 0.8, epsilon = 1e-15);
        assert_eq!(o.disbelief, 0.0);
        assert_eq!(o.uncertainty, 0.2);
        let o = Opinion::from_evidence(EvidenceCount::new(3, 5));
        assert_relative_eq!(o.belief, 0.3, epsilon = 1e-15);
        assert_relative_eq!(o.disbelief, 0.5, epsilon = 1e-15);
        assert_eq!(o.uncertainty, 0.2);
    }

    #[test]
    fn evidence_uncertainty_is_exact() {
        for total in [0u32, 1, 2, 7, 29, 1000] {
            let o = Opinion::from_evidence(EvidenceCount::new(total, 0));
            assert_eq!(o.uncertainty, 2.0 / (f64::from(total) + 2.0));
        }
    }

    #[test]
    fn evidence_mapping_converges_to_the_crisp_ratio() {
        let (p, n) = (750_000u32, 250_000u32);
        let o = Opinion::from_evidence(EvidenceCount::new(p, n));
        assert_relative_eq!(o.belief, 0.75, epsilon = 1e-5);
        assert_relative_eq!(o.disbelief, 0.25, epsilon = 1e-5);
        assert!(o.uncertainty < 1e-5);
    }

    #[test]
    fn ideal_opinion_is_crisp() {
        assert_eq!(Opinion::ideal(1.0).unwrap(), Opinion::FULL_BELIEF);
        let o = Opinion::ideal(0.73).unwrap();
        assert_eq!((o.belief, o.disbelief, o.uncertainty), (0.73, 0.27, 0.0));
        assert!(Opinion::ideal(1.5).is_err());
        assert!(Opinion::ideal(-0.1).is_err());
    }

    #[test]
    fn json_round_trip_preserves_exact_values() {
        let o = Opinion::new(0.123456789012345, 0.2, 0.676543210987655).unwrap();
        let json = serde_json::to_string(&o).unwrap();
        let back: Opinion = serde_json::from_str(&json).unwrap();
        assert_eq!(o, back);
    }

    #[test]
    fn json_deserialization_validates() {
        let err = serde_json::from_str::<Opinion>(r#"{"b":0.9,"d":0.9,"u":0.9}"#);
        assert!(err.is_err());
    }
}
