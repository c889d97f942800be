use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong while building or analysing a semigroup.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("table shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("table entry {value} at ({row}, {col}) is out of range")]
    EntryOutOfRange { row: usize, col: usize, value: usize },
    #[error("duplicate element label {0:?}")]
    DuplicateLabel(String),
    #[error("semigroup has {0} elements; the supported maximum is {max}", max = crate::semigroup::MAX_SIZE)]
    SizeLimit(usize),
    #[error("not associative: ({0}*{1})*{2} != {0}*({1}*{2})")]
    NonAssociative(usize, usize, usize),
    #[error("element {0} is not a zero")]
    BadZero(usize),
    #[error("element {0} is not an identity")]
    BadIdentity(usize),
    #[error("an empty generating set was given")]
    EmptyGenerators,
    #[error("invalid transformation: {0}")]
    BadTransformation(String),
    #[error("not an ideal: {0}*{1} escapes the set")]
    NotAnIdeal(usize, usize),
    #[error("not a right ideal: {0}*{1} escapes the set")]
    NotARightIdeal(usize, usize),
    #[error("not a subsemigroup: {0}*{1} escapes the set")]
    NotASubsemigroup(usize, usize),
    #[error("part {0} has no zero")]
    MissingZero(usize),
    #[error("sandwich matrix has an all-zero {0}")]
    BadSandwichMatrix(String),
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("act does not match the semigroup: {0}")]
    ActMismatch(String),
    #[error("not an action: {0}.({1}{2}) != ({0}.{1}).{2}")]
    NotAnAction(usize, usize, usize),
    #[error("not a subact: {0}.{1} escapes the set")]
    NotASubact(usize, usize),
    #[error("the semigroup or act has no zero")]
    NoZero,
    #[error("carrier of size {0} is too large for exhaustive enumeration (limit {1})")]
    TooLarge(usize, usize),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("empty subset")]
    EmptySubset,
    #[error("not a partial order: {0}")]
    NotAPartialOrder(String),
    #[error("unknown letter {0:?}")]
    UnknownLetter(String),
    #[error("rule {lhs} -> {rhs} does not decrease in shortlex order")]
    UnorderedRule { lhs: String, rhs: String },
    #[error("relation {0} = {0} cannot be oriented")]
    UnorientableRule(String),
    #[error("the rewriting system is not confluent")]
    NotConfluent,
    #[error("word {0} is not in the kernel")]
    NotInKernel(String),
    #[error("letter {0:?} does not define a content ideal of the presentation")]
    ContentNotPreserved(String),
    #[error("not a 0-minimal right ideal: {0}")]
    NotZeroMinimal(String),
    #[error("search bound exhausted: {0}")]
    BoundExceeded(String),
    #[error("certificate check failed: {0}")]
    CertificateViolation(String),
}
