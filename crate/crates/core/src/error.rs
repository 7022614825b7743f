//! Error types shared across the crate.

use thiserror::Error;

/// Errors from exact Laurent polynomial arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LaurentError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    /// No exact quotient exists. In the bracket pipeline this indicates a
    /// convention bug or a multi-component input, never a rounding issue.
    #[error("no exact quotient exists")]
    NonDivisible,
    /// An exponent was not divisible by 4 during the q-substitution.
    #[error("exponent {0} is not divisible by 4")]
    NotDivisibleBy4(i64),
}

/// Errors from diagram parsing, validation and generation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("malformed braid token {0:?}")]
    BadBraidToken(String),
    #[error("braid letter 0 is not a generator")]
    ZeroLetter,
    #[error("braid letter {letter} out of range for {strands} strands")]
    LetterOutOfRange { letter: i32, strands: usize },
    #[error("strand count must be at least 1")]
    BadStrandCount,
    #[error("crossing tuple has {0} entries, expected 4")]
    TupleArity(usize),
    #[error("arc label {0} does not appear exactly twice")]
    ArcMultiplicity(usize),
    #[error("arc labels must be 1..=2c, found {0}")]
    LabelRange(usize),
    #[error("arc succession is inconsistent (code is not orientable)")]
    InconsistentOrientation,
    #[error("component containing arc {0} is not labeled by a cyclic consecutive range")]
    NonConsecutiveComponent(usize),
    #[error("diagram has no crossings and no circles")]
    EmptyDiagram,
    #[error("pretzel needs at least 2 twist regions")]
    TooFewRegions,
    #[error("pretzel parameters must be nonzero")]
    ZeroPretzelParam,
    #[error("invalid PD JSON: {0}")]
    PdJson(String),
}

/// Errors from bracket evaluation engines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BracketError {
    #[error("naive state sum refused: {crossings} crossings exceeds oracle bound {bound}")]
    OracleBound { crossings: usize, bound: usize },
}

/// Errors from the colored Jones pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum JonesError {
    #[error("operation requires a knot diagram, input has {components} components")]
    NotAKnot { components: usize },
    #[error("need at least {needed} colors to form second differences, table has {have}")]
    InsufficientRange { have: usize, needed: usize },
    #[error(transparent)]
    Laurent(#[from] LaurentError),
    #[error(transparent)]
    Bracket(#[from] BracketError),
}
