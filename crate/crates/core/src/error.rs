use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("characteristic {0} is not supported by the linear algebra (need p < 256)")]
    UnsupportedCharacteristic(u32),
    #[error("the combinatorial H^1 criterion only holds in odd characteristic; p = 2 is out of scope")]
    EvenCharacteristic,
    #[error("invalid partition {0:?}: parts must be positive and nonincreasing")]
    InvalidPartition(Vec<usize>),
    #[error("could not parse partition from {0:?}")]
    PartitionSyntax(String),
    #[error("tabloid word does not match shape {0:?}")]
    TabloidShape(Vec<usize>),
    #[error("index {index} out of range for a space of dimension {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("{what} needs {required} but the configured cap is {cap}")]
    ResourceCap {
        what: &'static str,
        required: u128,
        cap: u128,
    },
    #[error("vector of length {found} does not live in a space of dimension {expected}")]
    ShapeMismatch { expected: usize, found: usize },
    #[error("vectors over GF({0}) and GF({1}) cannot be combined")]
    FieldMismatch(u32, u32),
    #[error("psi_({i},{v}) is not defined for {lambda:?}")]
    InvalidPsi { lambda: Vec<usize>, i: usize, v: usize },
    #[error("permutation image {0:?} is not a bijection")]
    InvalidPermutation(Vec<usize>),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("certificate is not verified: {0}")]
    Unverified(String),
    #[error("extension module is not closed under s_{generator}")]
    ClosureFailure { generator: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
