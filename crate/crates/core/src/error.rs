use thiserror::Error;

use crate::field::{Fe, FieldError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("leading coefficient a7 must be nonzero")]
    ZeroLeadingCoefficient,
    #[error("shift alpha must be nonzero")]
    ZeroShift,
    #[error("curve coefficient a must be nonzero")]
    DegenerateCurve,
    #[error("{what} requires odd m, got m = {m}")]
    EvenDegree { m: u32, what: &'static str },
    #[error("truth table length {0} is not a power of two >= 2")]
    TableLength(usize),
    #[error("invalid input: {0}")]
    Parse(String),
    #[error("X_alpha = {x_alpha} at alpha = {alpha} is outside {{0, 2q, 8q}}")]
    OutsideTrichotomy { alpha: Fe, x_alpha: u64 },
    #[error("{z} is not a root of P")]
    NotARootOfP { z: Fe },
    #[error("curve is neither of the form a = b nor b = 0")]
    NotMaisnerNartForm,
    #[error("Artin-Schreier equation for {what} has no solution in the field")]
    ArtinSchreierUnsolvable { what: &'static str },
    #[error("N1 + N2 + N3 - N = {0} is negative or odd")]
    InconsistentLemmaCounts(i64),
    #[error("gamma must be nonzero")]
    ZeroGamma,
}

pub type Result<T> = std::result::Result<T, Error>;
