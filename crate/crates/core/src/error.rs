use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("extension degree m={m} outside the supported range 2..=20")]
    FieldDegreeOutOfRange { m: u32 },
    #[error("modulus must have degree {m}, found {found:?}")]
    ModulusDegree { m: u32, found: Option<usize> },
    #[error("modulus {modulus} is reducible")]
    ReducibleModulus { modulus: String },
    #[error("modulus {modulus} is irreducible but not primitive: x has order {order}")]
    NonPrimitiveModulus { modulus: String, order: u64 },
    #[error("matrix shape mismatch: {left:?} times {right:?}")]
    ShapeMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error(
        "invalid exponent set E={e:?} for m={m}: need m >= 3 and E a nonempty subset of 1..={max}"
    )]
    InvalidExponentSet { m: u32, e: Vec<u32>, max: u32 },
    #[error("invalid defining set: {0}")]
    InvalidDefiningSet(String),
    #[error("internal consistency check failed: {0}")]
    Consistency(String),
    #[error("operation needs a code with role {expected}, got {found}")]
    WrongRole {
        expected: &'static str,
        found: String,
    },
    #[error("dimension {dimension} exceeds the exhaustive enumeration cap {cap}; use the MacWilliams transform")]
    DimensionCap { dimension: usize, cap: usize },
    #[error("enumeration infeasible: {0}")]
    Infeasible(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("format error: {0}")]
    Format(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
