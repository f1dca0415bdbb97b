use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("not a partition: {0:?}")]
    NotAPartition(Vec<usize>),
    #[error("{inner} is not contained in {outer}")]
    NotContained { outer: String, inner: String },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("not a standard tableau")]
    NotStandard,
    #[error("tableau is not compatible with the diagram")]
    NotCompatible,
    #[error("tableau is not peelable for the diagram")]
    NotPeelable,
    #[error("shuffle tableau is not Yamanouchi")]
    NotYamanouchi,
    #[error("Jacobi-Trudi shapes undefined: {0}")]
    JacobiTrudi(String),
    #[error("strand tracing failed: {0}")]
    Strands(String),
    #[error("hypotheses fail: {0}")]
    Hypotheses(String),
    #[error("theta failed: {0}")]
    Theta(String),
}
