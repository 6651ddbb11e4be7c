use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },

    #[error("group order {order} exceeds cap {cap}")]
    OrderExceedsCap { order: String, cap: u64 },

    #[error("group is not transitive")]
    NotTransitive,

    #[error("the two points must differ")]
    EqualPoints,

    #[error("group is primitive: no proper block system exists")]
    PrimitiveInput,

    #[error("partition is not invariant under generator {gen_index}")]
    NotInvariant { gen_index: usize },

    #[error("seed permutation {index} is not an element of the group")]
    SeedNotInGroup { index: usize },

    #[error("budget exceeded after examining {examined} colorings")]
    BudgetExceeded { examined: u64 },

    #[error("precondition failed: {0}")]
    PreconditionFailed(String),

    #[error("cycle notation syntax error: {0}")]
    Syntax(String),

    #[error("point {0} repeated across cycles")]
    RepeatedPoint(usize),

    #[error("unsupported field size {0}")]
    UnsupportedField(u64),

    #[error("degree {0} too large for this construction")]
    DegreeTooLarge(usize),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("catalog entry {name}: {msg}")]
    MetadataMismatch { name: String, msg: String },

    #[error("coloring length {got} does not match degree {want}")]
    LengthMismatch { got: usize, want: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
