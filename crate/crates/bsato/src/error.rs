use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("inexact division")]
    InexactDivision,
    #[error("unsupported dimension: n = {0}")]
    UnsupportedDimension(usize),
    #[error("unit ideal: the zero exponent vector cannot generate a proper ideal")]
    UnitIdeal,
    #[error("face lies in a coordinate hyperplane")]
    CoordinateFace,
    #[error("no compact faces")]
    NoCompactFaces,
    #[error("arrangement is not generic")]
    NotGeneric,
    #[error("arrangement is not reduced: forms {0} and {1} are proportional")]
    NotReduced(usize, usize),
    #[error("arrangement is not essential")]
    NotEssential,
    #[error("degree must exceed dimension (d > n)")]
    DegreeTooSmall,
    #[error("codimension-2 multiplicity > 3 unsupported")]
    MultiplicityTooLarge,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
