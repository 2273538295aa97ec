use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("denominator factor `{0}` specializes to zero")]
    ZeroDenominator(String),
    #[error("pole at the limit point")]
    PoleAtLimit,
    #[error("expression is not univariate in tau (found `{0}`)")]
    NotUnivariate(String),
    #[error("invalid index {index} for variable family `{family}`")]
    BadVariableIndex { family: &'static str, index: u32 },
    #[error("sequence rule has no entry for index {0}")]
    IndexOutOfRange(u32),
    #[error("parse error: {0}")]
    Parse(String),
}
