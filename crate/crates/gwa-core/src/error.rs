//! Error type shared across the kernel.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, KernelError>;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum KernelError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("operands belong to different polynomial rings")]
    RingMismatch,
    #[error("inexact division: remainder is nonzero")]
    InexactDivision,
    #[error("`{0}` is not a ring variable")]
    VariableAbsent(String),
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("map is not invertible: {0}")]
    NotInvertible(String),
    #[error("sigma_{0} and sigma_{1} do not commute")]
    NonCommutingSigmas(usize, usize),
    #[error("sigma_{0} moves defining element a_{1}")]
    SigmaMovesForeignA(usize, usize),
    #[error("defining element a_{0} is zero")]
    ZeroDefiningElement(usize),
    #[error("elements belong to different algebras")]
    AlgebraMismatch,
    #[error("skew-ring context mismatch")]
    ContextMismatch,
    #[error("presentation is not of surjective type: sigma^{0:?} acts as the identity")]
    NotSurjectiveType(Vec<i64>),
    #[error("element is not in the image of the embedding at degree {0:?}")]
    NotInImage(Vec<i64>),
    #[error("coefficient is not invariant under the stabilizer of the degree vector")]
    NotStabilizerInvariant,
    #[error("group order {0} exceeds the configured cap {1}")]
    CapExceeded(u64, u64),
    #[error("{0} does not divide {1}")]
    NotDivisible(u32, u32),
    #[error("coefficient field has no primitive {0}-th root of unity")]
    FieldLacksRoots(u32),
    #[error("lambda is zero or a root of unity")]
    RootOfUnityLambda,
    #[error("operation requires the classical tensorial setting")]
    NonClassicalSetting,
    #[error("syntax error at offset {0}")]
    SyntaxError(usize),
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("generator index {0} out of range for rank {1}")]
    RankOutOfRange(usize, usize),
    #[error("negative exponent")]
    NegativeExponent,
    #[error("invalid input: {0}")]
    InvalidInput(String),
}
