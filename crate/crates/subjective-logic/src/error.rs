use thiserror::Error;

/// Errors raised by opinion construction and the operator algebra.
#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum OpError {
    #[error("components ({b}, {d}, {u}) violate the simplex constraint")]
    SimplexViolation { b: f64, d: f64, u: f64 },
    #[error("{name} = {value} outside [{lo}, {hi}]")]
    DomainError {
        name: &'static str,
        value: f64,
        lo: f64,
        hi: f64,
    },
    #[error("point ({x}, {y}) lies outside the opinion triangle")]
    OutOfTriangle { x: f64, y: f64 },
    #[error("direction is undefined at the belief vertex")]
    UndefinedDirection,
    #[error("empty input")]
    EmptyInput,
    #[error("all fusion weights are zero")]
    AllWeightsZero,
}
