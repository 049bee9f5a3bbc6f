use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("quantum factorial of negative argument {0}")]
    NegativeFactorial(i64),
    #[error("inadmissible coloring at vertex {vertex}: {reason}")]
    Inadmissible { vertex: usize, reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("operands live in different algebras ({0} vs {1})")]
    MixedAlgebras(String, String),
    #[error("no image given for generator {0}")]
    MissingImage(String),
    #[error("element is not an invertible monomial")]
    NotInvertible,
    #[error("monomial {0} is not torus invariant")]
    Unbalanced(String),
    #[error("{kind} index {index} out of range for n = {n}")]
    IndexOutOfRange {
        kind: &'static str,
        index: i64,
        n: usize,
    },
    #[error("surface parameter n = {0} must be at least 2")]
    BadSurface(usize),
    #[error("{0}")]
    Unsupported(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GradedError {
    #[error("twist at index {k} needs a nonzero entry, component {coweight} has none")]
    ZeroTwist { k: usize, coweight: String },
    #[error("coweight {0} is not dominant")]
    NotDominant(String),
    #[error("coweight has length {got}, expected {expected}")]
    Length { got: usize, expected: usize },
    #[error("coefficient of {0} is not invariant under the required inversions")]
    NotInvariant(String),
    #[error("coefficient of {0} is not a Laurent polynomial")]
    NotLaurent(String),
    #[error("singular matrix")]
    Singular,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FusionError {
    #[error("strand counts differ ({0} vs {1})")]
    StrandMismatch(usize, usize),
    #[error("pairing is not a planar perfect matching")]
    NotPlanar,
    #[error("inadmissible parameters: {0}")]
    Inadmissible(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

#[derive(Debug, Error)]
pub enum EvalError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Graded(#[from] GradedError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error("type error: {0}")]
    Type(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("n = {0} is below the minimum of 2")]
    SmallN(usize),
    #[error("empty {0} range")]
    EmptyRange(&'static str),
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
}
