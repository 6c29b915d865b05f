use thiserror::Error;

use crate::families::Family;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("point {point} lies outside the chain 1..={n}")]
    OutOfChain { point: i64, n: u32 },

    #[error("domain point {0} appears more than once")]
    DuplicateDomainPoint(u32),

    #[error("image point {0} appears more than once")]
    DuplicateImagePoint(u32),

    #[error("maps live on different chains ({left} vs {right})")]
    ChainMismatch { left: u32, right: u32 },

    #[error("operation is undefined for the empty map")]
    EmptyMap,

    #[error("n = {n} exceeds the {what} bound of {bound}")]
    BoundExceeded {
        what: &'static str,
        n: u32,
        bound: u32,
    },

    #[error("{what}: argument out of range ({detail})")]
    OutOfRange { what: &'static str, detail: String },

    #[error("{what}: division by {divisor} leaves remainder {remainder}")]
    InexactDivision {
        what: &'static str,
        divisor: String,
        remainder: String,
    },

    #[error("{what}: intermediate value does not fit the scalar type")]
    Overflow { what: &'static str },

    #[error("{what}: closed form gives {closed} but summation gives {summed}")]
    Mismatch {
        what: &'static str,
        closed: String,
        summed: String,
    },

    #[error("no closed form for the {statistic} statistic of {family}")]
    Unsupported {
        family: Family,
        statistic: &'static str,
    },

    #[error("unknown {what} `{value}`")]
    Unknown { what: &'static str, value: String },
}
