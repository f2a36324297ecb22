use crate::poly::Rat;

/// Errors raised by the decision procedures.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("interval endpoint {0} is a root")]
    EndpointIsRoot(Rat),
    #[error("empty interval: lower end {lo} is not below upper end {hi}")]
    EmptyInterval { lo: Rat, hi: Rat },
    #[error("both polynomials are constant in the elimination variable")]
    BothConstantInVar,
    #[error("subresultant index {k} out of range (at most {max})")]
    KOutOfRange { k: usize, max: usize },
    #[error("zero leading coefficient")]
    ZeroLeadingCoefficient,
    #[error("{0} is not a common zero of R0 and the leading coefficient M")]
    AlphaNotCommonZero(Rat),
    #[error("input polynomial is constant")]
    ConstantInput,
    #[error("degree {found} exceeds the supported maximum {max}")]
    DegreeTooHigh { found: u32, max: u32 },
    #[error("leading coefficient vanishes on the strip")]
    LeadingCoeffVanishesOnStrip,
    #[error("total degree is {0:?}, expected exactly 4")]
    DegreeNotFour(Option<u32>),
    #[error("quartic part is zero")]
    QuarticPartZero,
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("alpha index i = {i} out of range for k = {k}")]
    DenominatorZero { i: i64, k: i64 },
    #[error("Hankel indices must satisfy 1 <= j <= k (got j = {j}, k = {k})")]
    BadIndices { j: usize, k: usize },
    #[error("matrix is not square")]
    NotSquare,
    #[error("coefficient vectors must both have length k + 1 >= 2 (got {a} and {c})")]
    BadLength { a: usize, c: usize },
    #[error("sign alternation lemma violated: {0}")]
    LemmaViolation(String),
    #[error("affine map is singular")]
    SingularMap,
    #[error("polynomial does not have the required shape: {0}")]
    ShapeMismatch(String),
    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),
    #[error("witness search exceeded x = 2^64 without reaching a non-positive value")]
    WitnessSearchExhausted,
}

pub type Result<T> = std::result::Result<T, Error>;
