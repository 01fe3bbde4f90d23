use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate element `{0}`")]
    DuplicateElement(String),
    #[error("cover references unknown element `{0}`")]
    UnknownElementInCover(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("element name `{0}` is reserved")]
    ReservedName(String),
    #[error("cover relation contains a cycle through `{0}`")]
    CycleDetected(String),
    #[error("elements `{0}` and `{1}` are not comparable")]
    NotComparable(String, String),
    #[error("poset has no cover relations")]
    IsAntichain,
    #[error("poset is empty")]
    EmptyPoset,
    #[error("point is not in the cone: {0}")]
    NotInCone(String),
    #[error("chain sums differ; point is not in the image of the cover map")]
    NotInG,
    #[error("a value at the top element is fixed to 0 and may not be given")]
    ValueAtInfinity,
    #[error("value out of range: {0}")]
    OutOfRange(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("search box too large: {0} states")]
    BoxTooLarge(u128),
    #[error("arithmetic overflow in exact elimination")]
    Overflow,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
