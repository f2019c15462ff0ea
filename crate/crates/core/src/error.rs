use std::fmt;

use thiserror::Error;

/// Syntax or literal error in textual input, with a byte offset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(position: usize, message: impl Into<String>) -> Self {
        ParseError {
            position,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at position {}: {}", self.position, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error {0}")]
    Parse(#[from] ParseError),
    #[error("weighted degree of the zero polynomial is undefined")]
    UndefinedDegree,
    #[error("polynomial is not in normal form (contains both z2 and ~z2 in one monomial)")]
    NotNormalForm,
    #[error("point is not on the unit circle: |tau|^2 = {0}")]
    NotOnCircle(String),
    #[error("slice direction must satisfy |v|^2 = 1 and v_n = 0: {0}")]
    BadSlicePlane(String),
    #[error("no antiholomorphic content above N = {0}")]
    NoAntiholomorphicContent(u32),
    #[error("input contains ~z2; route it through the moment criterion instead")]
    ConjugateSecondVariable,
    #[error("quadrature needs at least {required} nodes, got {given}")]
    InsufficientNodes { required: usize, given: usize },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("weighted degree {degree} exceeds the limit {limit}")]
    DegreeLimit { degree: u32, limit: u32 },
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
