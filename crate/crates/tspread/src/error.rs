//! Error type shared across the crate.

use num_bigint::BigUint;

use crate::macaulay::FtViolation;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid context: {0}")]
    InvalidContext(String),

    #[error("variable index {index} outside [1, {n}]")]
    IndexOutOfRange { index: u32, n: u32 },

    #[error("degree {degree} out of range (maximum {max})")]
    DegreeOutOfRange { degree: usize, max: usize },

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("monomial {0} is not t-spread")]
    NotTSpread(String),

    #[error("mixed degrees in set: found degree {found}, expected {expected}")]
    MixedDegrees { expected: usize, found: usize },

    #[error("requested size {size} exceeds the {available} available monomials")]
    InfeasibleSize { size: BigUint, available: BigUint },

    #[error("set too large to materialize ({0} elements)")]
    SetTooLarge(BigUint),

    #[error("shadow is empty: degree-{degree} monomials cannot be extended within n = {n}")]
    EmptyShadow { degree: usize, n: u32 },

    #[error("operator requires n > t_1 + ... + t_(d-1)")]
    NotFullSupport,

    #[error("operator argument {value} exceeds |M| = {max}")]
    OperatorOutOfRange { value: BigUint, max: BigUint },

    #[error("expansion degree must be at least 1")]
    ExpansionDegree,

    #[error("f-vector has {got} entries, expected {expected}")]
    FtVectorLength { got: usize, expected: usize },

    #[error("invalid f-vector: {0}")]
    InvalidFtVector(FtViolation),

    #[error("ideal is not t-spread strongly stable: {0}")]
    NotStronglyStable(String),

    #[error("the unit ideal is excluded here")]
    UnitIdeal,
}
