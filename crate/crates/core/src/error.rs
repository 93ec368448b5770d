use thiserror::Error;

/// Malformed textual input (scalars, polynomials, presentations).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{message}")]
pub struct ParseError {
    pub message: String,
    pub line: Option<usize>,
}

impl ParseError {
    pub fn new(message: impl Into<String>) -> Self {
        Self {
            message: message.into(),
            line: None,
        }
    }

    pub fn at_line(mut self, line: usize) -> Self {
        if self.line.is_none() {
            self.line = Some(line);
            self.message = format!("line {line}: {}", self.message);
        }
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeedError {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("mutable row list is invalid: {0}")]
    MutableRows(String),
    #[error("principal part of B is not skew-symmetric at ({0}, {1})")]
    PrincipalNotSkew(usize, usize),
    #[error("L is not skew-symmetric at ({0}, {1})")]
    NotSkew(usize, usize),
    #[error("mutation direction {0} is out of range (seed has {1} mutable columns)")]
    DirectionOutOfRange(usize, usize),
    #[error("row {0} holds a frozen variable and cannot be mutated")]
    FrozenVariable(usize),
    #[error("B and L are incompatible: (B^T L)[{row}][{col}] = {value}")]
    Incompatible { row: usize, col: usize, value: i64 },
    #[error("matrix mutation produced an odd numerator at ({0}, {1})")]
    OddNumerator(usize, usize),
    #[error("the two sign constructions of the mutated L disagree")]
    InconsistentLMutation,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TorusError {
    #[error("torus elements live over different frames")]
    FrameMismatch,
    #[error("exponent vector has length {got}, frame has rank {expected}")]
    Length { expected: usize, got: usize },
    #[error("division by zero")]
    DivisionByZero,
    #[error("exact division left a nonzero remainder")]
    InexactDivision,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("relation `{0}` has a leading coefficient that is not a unit")]
    NonUnitLeading(String),
    #[error("degree {degree} exceeds the bound {bound}")]
    DegreeBound { degree: usize, bound: usize },
    #[error("completion exceeded the budget of {0} rules")]
    Budget(usize),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("exchange graph exceeds the bound of {0} vertices")]
    BoundExceeded(usize),
    #[error("seed does not track cluster-variable expansions")]
    MissingExpansions,
    #[error(transparent)]
    Seed(#[from] SeedError),
    #[error(transparent)]
    Torus(#[from] TorusError),
}

/// Umbrella error for the command layer and catalog.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Seed(#[from] SeedError),
    #[error(transparent)]
    Torus(#[from] TorusError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("unknown example `{0}`")]
    UnknownExample(String),
    #[error("example `{0}` has no algebra realization")]
    NoRealization(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}
