use thiserror::Error;

/// Errors raised anywhere in the crate.
///
/// Variant names double as the stable error names printed by the CLI.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    SpecMismatch,
    #[error("element is not a square")]
    NonSquare,
    #[error("zero has no multiplicative order")]
    ZeroElement,
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("vector is not invertible for the cyclic convolution product")]
    NotInvertible,
    #[error("a lies in the image of x -> x^p - x (its trace is zero)")]
    TraceZero,
    #[error("evaluation point lies in the prime field")]
    EvaluationPointInPrimeField,
    #[error("class of a has order {order} in K*/(K*)^{n}, expected {n}")]
    OrderTooSmall { order: u64, n: u64 },
    #[error("bad root of unity: {0}")]
    BadRootOfUnity(String),
    #[error("point is not on the torus")]
    PointOffCurve,
    #[error("point has order {order}, expected {expected}")]
    NotGenerator { order: u64, expected: u64 },
    #[error("search exhausted without finding a candidate")]
    ExhaustedSearch,
    #[error("no irreducible factor of degree {0}")]
    NoDegreeNFactor(usize),
    #[error("no square root passes the isogeny check")]
    SignCheckFailed,
    #[error("n-torsion mismatch: {0}")]
    NTorsionMismatch(String),
    #[error("sum of the translated functions is not constant")]
    ConstantCheckFailed,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("basis is not normal: {0}")]
    NotNormal(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Variant name, used as the machine-readable error tag.
    pub fn name(&self) -> &'static str {
        match self {
            Error::DivisionByZero => "DivisionByZero",
            Error::SpecMismatch => "SpecMismatch",
            Error::NonSquare => "NonSquare",
            Error::ZeroElement => "ZeroElement",
            Error::DegenerateInput(_) => "DegenerateInput",
            Error::LengthMismatch { .. } => "LengthMismatch",
            Error::NotInvertible => "NotInvertible",
            Error::TraceZero => "TraceZero",
            Error::EvaluationPointInPrimeField => "EvaluationPointInPrimeField",
            Error::OrderTooSmall { .. } => "OrderTooSmall",
            Error::BadRootOfUnity(_) => "BadRootOfUnity",
            Error::PointOffCurve => "PointOffCurve",
            Error::NotGenerator { .. } => "NotGenerator",
            Error::ExhaustedSearch => "ExhaustedSearch",
            Error::NoDegreeNFactor(_) => "NoDegreeNFactor",
            Error::SignCheckFailed => "SignCheckFailed",
            Error::NTorsionMismatch(_) => "NTorsionMismatch",
            Error::ConstantCheckFailed => "ConstantCheckFailed",
            Error::SingularMatrix => "SingularMatrix",
            Error::NotNormal(_) => "NotNormal",
            Error::InvalidParameter(_) => "InvalidParameter",
            Error::Parse(_) => "ParseError",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
