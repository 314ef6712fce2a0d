use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parameter context mismatch: [{left}] vs [{right}]")]
    ParamMismatch { left: String, right: String },

    #[error("invalid parameter space: {0}")]
    InvalidSpace(String),

    #[error("unknown parameter `{0}`")]
    UnknownParam(String),

    #[error("division by zero scalar")]
    DivisionByZero,

    #[error("substitution produces a zero denominator")]
    ZeroDenominator,

    #[error("cyclic substitution: binding for `{0}` mentions a substituted parameter")]
    CyclicSubstitution(String),

    #[error("generator {generator} is not valid for {kind}")]
    InvalidGenerator { generator: String, kind: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("linear system has an empty solution space where one was expected: {0}")]
    EmptyNullspace(String),

    #[error("solution is not unique: {0}")]
    NotUnique(String),

    #[error("tensor index {index} falls outside the truncation window [{lo}, {hi}]")]
    WindowOverflow { index: i64, lo: i64, hi: i64 },

    #[error("integrality of `{0}` is undecidable for a non-constant scalar")]
    UndecidableIntegrality(String),

    #[error("degenerate elimination: {0}")]
    Degenerate(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("arithmetic overflow: {0}")]
    Overflow(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
