use thiserror::Error;

/// Errors raised by the algebra, ideal and interpolation routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch: operands live in different polynomial rings")]
    RingMismatch,
    #[error("undefined {0} of the zero polynomial")]
    ZeroPolynomial(&'static str),
    #[error("point has {got} coordinates, ring has {expected} variables")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),
    #[error("divisor list contains the zero polynomial")]
    ZeroDivisor,
    #[error("generator list has no nonzero polynomial")]
    EmptyGenerators,
    #[error("monomial order {0} is not defined for a ring with {1} variables")]
    InvalidOrder(String, usize),
    #[error("radicality undecided for a positive-dimensional ideal; use data-level membership")]
    PositiveDimensional,
    #[error("varieties {0} and {1} intersect; use sequential interpolation")]
    VarietiesIntersect(usize, usize),
    #[error("leading form of the quadric is not the sum of squares of all variables")]
    LeadingFormMismatch,
    #[error("operator lowest degree {operator} differs from modulus degree {modulus}")]
    LowestDegreeMismatch { operator: u32, modulus: u32 },
    #[error("transversality fails at degree bound {0}: the operator kernel meets the ideal")]
    TransversalityFailure(u32),
    #[error("modulus must have degree at least 1")]
    ConstantModulus,
    #[error("invalid problem: {0}")]
    InvalidProblem(String),
    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
