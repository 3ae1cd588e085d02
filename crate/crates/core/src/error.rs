use num_bigint::BigInt;
use thiserror::Error;

use crate::algebra::Rational;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("singular curve: {0}")]
    SingularCurve(String),
    #[error("malformed field: {0}")]
    MalformedField(String),
    #[error("T = 0 is outside the affine chart")]
    ChartBoundary,
    #[error("T = {0} lies on a singular fiber")]
    SingularFiber(Rational),
    #[error("point is not on the surface (residual {residual})")]
    NotOnSurface { residual: Rational },
    #[error("degenerate: the intersection cubic has the rational root {root}")]
    DegenerateRational { root: Rational },
    #[error("degenerate: square class of U*T is 1, the point is defined over the cubic field")]
    DegenerateCubic,
    #[error("degenerate: U = 0, the conic is the doubled line")]
    DegenerateLine,
    #[error("degenerate: quadratic class {delta} is not defined or invalid")]
    BadDelta { delta: BigInt },
    #[error("no generator in {{rho, rho^5}} matches the orbit")]
    ClassificationFailure,
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
    #[error("insufficient data: {0}")]
    InsufficientData(String),
    #[error("limit {0} is above the 64-bit census ceiling")]
    LimitTooLarge(u64),
}

impl Error {
    /// Mathematically meaningful degenerate outcomes, as opposed to failures.
    pub fn is_degenerate(&self) -> bool {
        matches!(
            self,
            Error::DegenerateRational { .. } | Error::DegenerateCubic | Error::DegenerateLine
        )
    }
}
