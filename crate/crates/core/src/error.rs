use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("characteristic {0} is too large")]
    CharacteristicTooLarge(u64),
    #[error("t^2 + {c1}t + {c0} has a root mod {p}")]
    ReducibleModulus { p: u64, c0: u64, c1: u64 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("element does not lie in the field")]
    NotInField,
    #[error("cannot parse field element {0:?}")]
    Parse(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("image is not contained in the kernel")]
    ImageNotContained,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("characteristic {0} is too small, need p >= 5")]
    CharTooSmall(u64),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("lambda has length {got}, expected {expected}")]
    LambdaLength { expected: usize, got: usize },
    #[error("basis index {index} out of range 1..={dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("grade {grade} outside {min}..={max}")]
    GradeOutOfRange { grade: usize, min: usize, max: usize },
    #[error("a bracket needs at least two elements")]
    TooFewElements,
    #[error("the omega component does not refer to the given 2-cochain")]
    InconsistentCochain,
    #[error("closed forms are only available over prime fields")]
    NotPrimeField,
    #[error("no polynomial of the expected shape matches the map")]
    NoClosedForm,
    #[error(transparent)]
    Field(#[from] FieldError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CohomologyError {
    #[error("unknown basis claim {0:?}")]
    UnknownClaim(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExtensionError {
    #[error("the restricted cochain is not a cocycle")]
    NotACocycle,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
