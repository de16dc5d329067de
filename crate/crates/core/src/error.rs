use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse scalar: {0}")]
    Parse(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RealizationError {
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("invalid group table: {0}")]
    InvalidGroup(String),
    #[error("invalid character: {0}")]
    InvalidCharacter(String),
    #[error("realization check failed: {0}")]
    Invalid(String),
    #[error("the three summands of z have different weights: {0}")]
    InconsistentZWeight(String),
    #[error("the map G' -> F4 x| C6 is not well defined: {0}")]
    Epimorphism(String),
    #[error("unknown group element label `{0}`")]
    UnknownLabel(String),
    #[error("bad realization config: {0}")]
    Config(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RewriteError {
    #[error("degree bound {0} is below the minimum of 10")]
    DegreeBound(usize),
    #[error("leading coefficient {0} is not a unit of Q[F]")]
    NonUnitLeading(String),
    #[error("expected 72 standard monomials, found {0}")]
    StandardCount(usize),
    #[error("change of basis to the word basis is singular")]
    SingularBasis,
    #[error("cannot parse word `{0}`")]
    WordParse(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("z is not of weight e for this realization")]
    ZNotWeightE,
    #[error("expected a one-dimensional space of integrals, found dimension {0}")]
    IntegralDimension(usize),
    #[error("no group element realizes the distinguished group-like character")]
    NoDistinguishedGrouplike,
    #[error(transparent)]
    Realization(#[from] RealizationError),
    #[error(transparent)]
    Rewrite(#[from] RewriteError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReprError {
    #[error("idempotent verification failed for {0}")]
    Idempotents(String),
    #[error("orthogonalization input is not commuting idempotents: {0}")]
    NotCommuting(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("expected a 12-dimensional simple module, got dimension {0}")]
    SimpleDimension(usize),
    #[error("module is not simple: {0}")]
    NotSimple(String),
    #[error("simple module count mismatch: {0}")]
    ClassCount(String),
    #[error("module invariant violated: {0}")]
    ModuleInvariant(String),
    #[error("spherical verdicts disagree: {0}")]
    SphericalDisagreement(String),
    #[error("bad table fixture: {0}")]
    Fixture(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Realization(#[from] RealizationError),
    #[error(transparent)]
    Rewrite(#[from] RewriteError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}
