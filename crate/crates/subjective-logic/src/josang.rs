//! Classical discounting and consensus operators for binary opinions.

use crate::error::OpError;
use crate::opinion::Opinion;

/// Denominators below this make the consensus crisp (Case II).
pub const CONSENSUS_CRISP_THRESHOLD: f64 = 1e-12;

/// Discounts `c` (the conclusion held by the intermediary) by `t` (the
/// trust placed in that intermediary): b = b_t·b_c, d = b_t·d_c,
/// u = d_t + u_t + b_t·u_c. Any trust mass not placed in belief becomes
/// uncertainty about the conclusion, so u never drops below d_t + u_t.
pub fn discount(t: Opinion, c: Opinion) -> Opinion {
    let b = t.belief * c.belief;
    let d = t.belief * c.disbelief;
    let u = t.disbelief + t.uncertainty + t.belief * c.uncertainty;
    Opinion::new(b, d, u).expect("discounted masses stay on the simplex")
}

/// Fuses two independent opinions about the same statement. With
/// κ = u_a + u_b − u_a·u_b ≥ [`CONSENSUS_CRISP_THRESHOLD`] (Case I):
/// b = (b_a·u_b + b_b·u_a)/κ, d likewise, u = u_a·u_b/κ. Below the
/// threshold both opinions are (nearly) crisp (Case II) and the result
/// is their `crisp_weight`-weighted average with zero uncertainty,
/// where `crisp_weight` is the relative weight of `a` over `b`.
pub fn fuse_with_crisp_weight(a: Opinion, b: Opinion, crisp_weight: f64) -> Opinion {
    // The vacuous opinion is the exact neutral element; computing κ in
    // floating point would round e.g. (0.1 + 1.0) − 0.1·1.0 away from 1.
    if a == Opinion::VACUOUS {
        return b;
    }
    if b == Opinion::VACUOUS {
        return a;
    }
    let kappa = a.uncertainty + b.uncertainty - a.uncertainty * b.uncertainty;
    if kappa >= CONSENSUS_CRISP_THRESHOLD {
        Opinion::new(
            (a.belief * b.uncertainty + b.belief * a.uncertainty) / kappa,
            (a.disbelief * b.uncertainty + b.disbelief * a.uncertainty) / kappa,
            (a.uncertainty * b.uncertainty) / kappa,
        )
        .expect("fused masses stay on the simplex")
    } else {
        Opinion::new(
            (crisp_weight * a.belief + b.belief) / (crisp_weight + 1.0),
            (crisp_weight * a.disbelief + b.disbelief) / (crisp_weight + 1.0),
            0.0,
        )
        .expect("averaged crisp masses stay on the simplex")
    }
}

/// [`fuse_with_crisp_weight`] with equal crisp weights, the right
/// default when nothing is known about how both uncertainties
/// vanished.
pub fn fuse(a: Opinion, b: Opinion) -> Opinion {
    fuse_with_crisp_weight(a, b, 1.0)
}

/// Left fold of [`fuse`] over `opinions`; a single opinion is returned
/// unchanged.
pub fn fuse_many<I>(opinions: I) -> Result<Opinion, OpError>
where
    I: IntoIterator<Item = Opinion>,
{
    let mut iter = opinions.into_iter();
    let first = iter.next().ok_or(OpError::EmptyInput)?;
    Ok(iter.fold(first, fuse))
}
