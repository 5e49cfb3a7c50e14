use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GaloisError {
    #[error("modulus {0} is not an odd prime >= 3")]
    NotPrime(u32),
    #[error("no element of order {z} exists modulo {q} ({z} does not divide {q}-1)")]
    NoElementOfOrder { q: u32, z: u32 },
    #[error("extension alphabet is only defined for z in {{2, 4, 6}}, got z = {0}; use the generic order-z constructor instead")]
    UnsupportedZ(u32),
    #[error("extension alphabet degenerates for q = {q}, z = {z}: {reason}")]
    DegenerateAlphabet { q: u32, z: u32, reason: String },
    #[error("division by zero in F_{0}")]
    DivisionByZero(u32),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("selected pivot block is rank-deficient; resample the permutation")]
    SingularSelection,
    #[error("search space of {required} candidates exceeds work limit {limit}")]
    WorkLimitExceeded { required: u128, limit: u64 },
    #[error("malformed instance: {0}")]
    MalformedInstance(String),
}

pub type Result<T> = std::result::Result<T, GaloisError>;
