//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes at the evaluation point")]
    PoleAtPoint,
    #[error("parse error at position {pos}: {msg}")]
    ParseError { pos: usize, msg: String },
    #[error("not a set partition: {0}")]
    NotAPartition(String),
    #[error("strand counts differ: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("index {index} out of range for {what}")]
    IndexOutOfRange { what: &'static str, index: usize },
    #[error("requested n = {0} exceeds the enumeration bound {1}")]
    BoundExceeded(usize, usize),
    #[error("shape {shape} does not occur at level {level}")]
    ShapeNotAtLevel { shape: String, level: String },
    #[error("shapes are not one augmented box apart: {0} / {1}")]
    NotOneBoxApart(String, String),
    #[error("coordinate for generator index {0} does not exist at this level")]
    CoordinateOutOfRange(usize),
    #[error("{0} is not a covering chain of partitions")]
    NotACoveringChain(String),
    #[error("reductive tableau pattern not tabulated: {0}")]
    ReductiveUnsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
