use thiserror::Error;

pub type Result<T> = std::result::Result<T, DahaError>;

#[derive(Debug, Error)]
pub enum DahaError {
    #[error("unsupported root system: {0}")]
    UnsupportedType(String),

    #[error("lattice error: {0}")]
    Lattice(String),

    #[error("datum mismatch between operands")]
    DatumMismatch,

    #[error("division by zero in coefficient field")]
    DivisionByZero,

    #[error("pole at specialization: factor {0} vanishes")]
    PoleAtSpecialization(String),

    #[error("q-exponent {0} is off the 1/{1} grid")]
    OffGrid(String, i64),

    #[error("t-exponent not representable: {0}")]
    BadTExponent(String),

    #[error("internal divisibility failure applying T_{0}: carrier left the polynomial ring")]
    Divisibility(usize),

    #[error("intertwiner denominator vanishes at affine root {0}")]
    IntertwinerPole(String),

    #[error("zero denominator in discretized operator at index point {0}")]
    DiscretizationPole(String),

    #[error("hypothesis violation: {0}")]
    Hypothesis(String),

    #[error("{0}")]
    Other(String),
}

impl DahaError {
    pub fn other(msg: impl Into<String>) -> Self {
        DahaError::Other(msg.into())
    }
}
