//! Planar embedding of the opinion triangle.
//!
//! An opinion maps to the point x = (d + u·cos 60°)/sin 60°, y = u of
//! the triangle with vertices B = (0, 0) (full belief), D = (2/√3, 0)
//! (full disbelief), and U = (1/√3, 1) (full uncertainty). The D–U edge
//! lies on the line √3·x + y = 2.

use serde::{Deserialize, Serialize};
use std::f64::consts::{FRAC_PI_3, PI};

use crate::error::OpError;
use crate::opinion::{Opinion, SIMPLEX_TOLERANCE};

pub(crate) const SQRT_3: f64 = 1.732_050_807_568_877_3;
pub(crate) const SIN_60: f64 = SQRT_3 / 2.0;
pub(crate) const COS_60: f64 = 0.5;

/// A point of the plane the opinion triangle is embedded in.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CartesianPoint {
    pub x: f64,
    pub y: f64,
}

pub const VERTEX_B: CartesianPoint = CartesianPoint { x: 0.0, y: 0.0 };
pub const VERTEX_D: CartesianPoint = CartesianPoint {
    x: 2.0 / SQRT_3,
    y: 0.0,
};
pub const VERTEX_U: CartesianPoint = CartesianPoint {
    x: 1.0 / SQRT_3,
    y: 1.0,
};

impl CartesianPoint {
    pub fn distance(self, other: CartesianPoint) -> f64 {
        ((self.x - other.x).powi(2) + (self.y - other.y).powi(2)).sqrt()
    }
}

/// The characteristic angles of an opinion O inside the triangle:
/// `alpha` = ∠OBD, `beta` = ∠ODB, `gamma` = ∠ODU, `delta` = ∠OUD, and
/// `epsilon` = ∠DOU. By construction gamma = π/3 − beta and
/// epsilon = π − gamma − delta.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OpinionAngles {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub delta: f64,
    pub epsilon: f64,
}

pub fn to_cartesian(o: Opinion) -> CartesianPoint {
    CartesianPoint {
        x: (o.disbelief + o.uncertainty * COS_60) / SIN_60,
        y: o.uncertainty,
    }
}

/// Algebraic inverse of [`to_cartesian`]: u = y, d = (√3·x − y)/2,
/// b = 1 − d − u.
pub fn from_cartesian(p: CartesianPoint) -> Result<Opinion, OpError> {
    let u = p.y;
    let d = (SQRT_3 * p.x - p.y) / 2.0;
    let b = 1.0 - d - u;
    Opinion::new(b, d, u).map_err(|_| OpError::OutOfTriangle { x: p.x, y: p.y })
}

/// The five angles locating an opinion relative to the triangle's
/// vertices. Each degenerate position (a vertex coinciding with the
/// opinion's point) is resolved before any division can hit 0/0.
pub fn angles_of(o: Opinion) -> OpinionAngles {
    let (b, d, u) = (o.belief, o.disbelief, o.uncertainty);
    // d + u·cos 60° vanishes only at B, where the direction is defined as 0.
    let alpha = if d + u * COS_60 == 0.0 {
        0.0
    } else {
        ((u * SIN_60) / (d + u * COS_60)).atan()
    };
    // 1 − (d + u·cos 60°) = b + u·cos 60° vanishes only at D.
    let beta = if b + u * COS_60 == 0.0 {
        FRAC_PI_3
    } else {
        ((u * SIN_60) / (1.0 - (d + u * COS_60))).atan()
    };
    let gamma = FRAC_PI_3 - beta;
    // |OU|² = (1 + d − u)²/3 + b²; zero only at U itself.
    let ou = ((1.0 + d - u).powi(2) / 3.0 + b * b).sqrt();
    // sin δ = b/|OU| ≤ sin 60°, so the principal arcsin branch is exact.
    let delta = if ou == 0.0 { 0.0 } else { (b / ou).asin() };
    let epsilon = PI - gamma - delta;
    OpinionAngles {
        alpha,
        beta,
        gamma,
        delta,
        epsilon,
    }
}

/// The intersection of the ray from B through the opinion's point with
/// the D–U edge. Undefined at B itself, where the ray has no direction.
pub fn max_vector_point(o: Opinion) -> Result<CartesianPoint, OpError> {
    if o.disbelief == 0.0 && o.uncertainty == 0.0 {
        return Err(OpError::UndefinedDirection);
    }
    let p = to_cartesian(o);
    let tan_a = angles_of(o).alpha.tan();
    let x = (2.0 - p.y + tan_a * p.x) / (tan_a + SQRT_3);
    Ok(CartesianPoint {
        x,
        y: -SQRT_3 * x + 2.0,
    })
}

/// |B→O| / |B→M_O|: how far the opinion sits along the ray from the
/// belief vertex toward the D–U edge. Both coordinates scale linearly
/// with (d, u) along that ray and the edge satisfies √3·x + y =
/// 2(d + u) = 2, so the fraction is d + u = 1 − b exactly. In
/// particular it is 0 at B (where the ray direction is undefined but
/// the distance from B is zero) and exactly 1 on the b = 0 edge.
pub fn radial_fraction(o: Opinion) -> f64 {
    1.0 - o.belief
}

/// Whether `x` lies in the admissible space of `t`: the quadrilateral
/// of opinions whose belief does not exceed `t`'s.
pub fn in_admissible_space(x: Opinion, t: Opinion) -> bool {
    x.belief <= t.belief + SIMPLEX_TOLERANCE
}
