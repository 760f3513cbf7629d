use alloc::string::String;

/// Errors raised by the algebraic kernels.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("characteristic {0} is not an odd prime")]
    BadCharacteristic(u32),
    #[error("cannot factor zero")]
    FactorZero,
    #[error("polynomial must have degree at least 1")]
    ConstantPolynomial,
    #[error("field mismatch: F_{0} vs F_{1}")]
    FieldMismatch(u32, u32),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),
    #[error("not an ideal: {0}")]
    NotIdeal(String),
    #[error("unit ideal")]
    UnitIdeal,
    #[error("empty subset")]
    EmptySubset,
    #[error("invalid hyperstructure: {0}")]
    InvalidTable(String),
    #[error("not a subgroup of the unit group: {0}")]
    NotSubgroup(String),
    #[error("not a Hopf ideal: {0}")]
    NotHopfIdeal(String),
    #[error("coassociativity violated at basis element {0}")]
    Coassociativity(usize),
    #[error("Hopf axioms fail: {0}")]
    NotHopf(String),
    #[error("invalid point: {0}")]
    InvalidPoint(String),
    #[error("presentation bound too small: {0}")]
    PresentationBound(String),
    #[error("size limit exceeded: {0}")]
    TooLarge(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
