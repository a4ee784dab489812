use thiserror::Error;

use crate::rat::Rat;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rational literal {0:?}")]
    BadRational(String),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("lines are parallel (common slope {0})")]
    ParallelLines(Rat),
    #[error("duplicate slope {0}: family is not in nearly general position")]
    DuplicateSlope(Rat),
    #[error("sign vector has length {got}, family has {expected} lines")]
    SignVectorLength { expected: usize, got: usize },
    #[error("sign vector does not describe a nonempty cell")]
    InfeasibleSignVector,
    #[error("parameter out of range: {0}")]
    ParameterRange(String),
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: vertical lines cannot be represented ({token:?})")]
    VerticalLine { line: usize, token: String },
    #[error("viewport contains no part of any line")]
    EmptyViewport,
    #[error("construction did not verify after {attempts} refinements: {reason}")]
    ConstructionFailed { attempts: u32, reason: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
