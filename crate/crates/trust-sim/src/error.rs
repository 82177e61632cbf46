use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SimError {
    /// A derived opinion broke a structural guarantee of the pipeline,
    /// e.g. a discounted opinion left the admissible space of its
    /// trust opinion. `key` locates the grid cell and subject.
    #[error("invariant violated at {key}: {detail}")]
    InvariantViolation { key: String, detail: String },
}
