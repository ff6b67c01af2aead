use num_bigint::BigUint;
use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot combine values from Q(sqrt({0})) and Q(sqrt({1}))")]
    MixedRadicands(BigUint, BigUint),
    #[error("square root of negative value {0}")]
    NegativeRadicand(String),
    #[error("square root of {0} is not representable as a+b*sqrt(r)")]
    NotRepresentable(String),
    #[error("invalid scalar literal {0:?}")]
    ParseScalar(String),

    #[error("affine map is singular")]
    SingularMap,
    #[error("matrix file, line {line}: {message}")]
    MatrixFormat { line: usize, message: String },

    #[error("relation {relation} takes {expected} points, got {actual}")]
    ArityMismatch {
        relation: String,
        expected: usize,
        actual: usize,
    },
    #[error("unknown relation {0:?}")]
    UnknownRelation(String),
    #[error("unknown geometry {0:?}")]
    UnknownGeometry(String),

    #[error("unknown transformation class {0:?}")]
    UnknownClass(String),
    #[error("map is not in Scal∘Triv")]
    NotInScalTriv,
    #[error("map is not in Scal∘Poi")]
    NotInScalPoi,
    #[error("map is already in Scal∘Triv")]
    AlreadyInScalTriv,

    #[error("syntax error at byte {offset}: {message}")]
    SyntaxError { offset: usize, message: String },
    #[error("unknown token {token:?} at byte {offset}")]
    UnknownToken { offset: usize, token: String },
    #[error("unsupported quantifier pattern: {0}")]
    UnsupportedQuantifierPattern(String),
    #[error("no value assigned to v{0}")]
    MissingAssignment(u32),
    #[error("unknown built-in formula {0:?}")]
    UnknownFormula(String),

    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

pub type Result<T> = std::result::Result<T, Error>;
