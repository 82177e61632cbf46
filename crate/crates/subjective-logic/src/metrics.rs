//! Distances between opinions and log-ratio comparison scores.

use crate::opinion::Opinion;

/// Distances are floored at this value before entering a ratio, since
/// exact zero distances occur whenever a derived opinion hits a crisp
/// ground-truth opinion.
pub const RATIO_FLOOR: f64 = 1e-12;

/// Euclidean distance in (b, d, u) coordinates; at most √2 between
/// simplex points.
pub fn geometric_distance(o1: Opinion, o2: Opinion) -> f64 {
    ((o1.belief - o2.belief).powi(2)
        + (o1.disbelief - o2.disbelief).powi(2)
        + (o1.uncertainty - o2.uncertainty).powi(2))
    .sqrt()
}

/// Absolute difference of the opinions' expected values; at most 1.
pub fn expected_distance(o1: Opinion, o2: Opinion) -> f64 {
    (o1.expected_value() - o2.expected_value()).abs()
}

/// Log-scale comparison of a candidate distance against a baseline
/// distance: positive when the candidate is closer to the truth.
/// Written as a difference of logs so that swapping the arguments
/// negates the result exactly.
pub fn log_ratio(d_candidate: f64, d_baseline: f64) -> f64 {
    d_baseline.max(RATIO_FLOOR).ln() - d_candidate.max(RATIO_FLOOR).ln()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::LN_2;

    fn opinion(b: f64, d: f64, u: f64) -> Opinion {
        Opinion::new(b, d, u).unwrap()
    }

    #[test]
    fn geometric_distance_hand_values() {
        let o = opinion(0.6, 0.2, 0.2);
        assert_eq!(geometric_distance(o, o), 0.0);
        assert_relative_eq!(
            geometric_distance(Opinion::FULL_BELIEF, Opinion::FULL_DISBELIEF),
            std::f64::consts::SQRT_2,
            epsilon = 1e-12
        );
        assert_relative_eq!(
            geometric_distance(o, opinion(0.2, 0.6, 0.2)),
            0.32_f64.sqrt(),
            epsilon = 1e-12
        );
    }

    #[test]
    fn geometric_distance_is_symmetric() {
        let (a, b) = (opinion(0.7, 0.1, 0.2), opinion(0.1, 0.4, 0.5));
        assert_eq!(geometric_distance(a, b), geometric_distance(b, a));
    }

    #[test]
    fn expected_distance_hand_values() {
        let o = opinion(0.6, 0.2, 0.2);
        assert_eq!(expected_distance(o, o), 0.0);
        assert_relative_eq!(
            expected_distance(o, opinion(0.2, 0.6, 0.2)),
            0.4,
            epsilon = 1e-12
        );
        assert_relative_eq!(
            expected_distance(Opinion::FULL_BELIEF, Opinion::VACUOUS),
            0.5,
            epsilon = 1e-12
        );
    }

    #[test]
    fn log_ratio_hand_values() {
        assert_eq!(log_ratio(0.3, 0.3), 0.0);
        assert_relative_eq!(log_ratio(0.5, 1.0), LN_2, epsilon = 1e-12);
        assert_relative_eq!(log_ratio(1.0, 0.5), -LN_2, epsilon = 1e-12);
    }

    #[test]
    fn log_ratio_is_exactly_antisymmetric() {
        let pairs = [(0.37, 0.91), (1e-3, 1.2), (0.5, 0.5), (1e-15, 0.2)];
        for (a, b) in pairs {
            assert_eq!(log_ratio(a, b), -log_ratio(b, a));
        }
    }

    #[test]
    fn log_ratio_matches_the_quotient_form_for_positive_inputs() {
        let pairs = [(0.37, 0.91), (0.001, 1.2), (0.5, 0.5), (1.0, 0.25)];
        for (c, b) in pairs {
            assert_relative_eq!(log_ratio(c, b), (b / c).ln(), epsilon = 1e-12);
        }
    }

    #[test]
    fn log_ratio_floors_zero_distances() {
        assert_eq!(log_ratio(0.0, 0.0), 0.0);
        assert_relative_eq!(log_ratio(0.0, 1.0), -RATIO_FLOOR.ln(), epsilon = 1e-12);
        assert_relative_eq!(log_ratio(1.0, 0.0), RATIO_FLOOR.ln(), epsilon = 1e-12);
    }
}
