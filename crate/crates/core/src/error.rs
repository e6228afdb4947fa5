use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("characteristic {0} is even; only odd residue characteristic is supported")]
    EvenCharacteristic(u64),
    #[error("ring order {order} exceeds the enumeration cap {cap}")]
    OrderTooLarge { order: u128, cap: u64 },
    #[error("invalid ring parameters: {0}")]
    InvalidRing(String),
    #[error("element index {index} is out of range for a ring of order {order}")]
    ElementOutOfRange { index: u64, order: u64 },
    #[error("element {0} is not a unit")]
    NotAUnit(u64),
    #[error("operands belong to different rings ({left} vs {right})")]
    RingMismatch { left: String, right: String },
    #[error("invalid polynomial: {0}")]
    InvalidPolynomial(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid experiment configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}
