use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("zero input")]
    ZeroInput,
    #[error("reducible defining polynomial")]
    ReducibleDefiningPolynomial,
    #[error("defining polynomial must be monic of degree >= 1")]
    NotMonic,
    #[error("composite modulus {0}")]
    CompositeModulus(u64),
    #[error("n must be at least 3 (got {0})")]
    CyclotomicIndex(u64),
    #[error("singular curve")]
    Singular,
    #[error("point not on curve")]
    NotOnCurve,
    #[error("bad prime {0}")]
    BadPrime(u64),
    #[error("insufficient primes: found {found} good primes below {cap}")]
    InsufficientPrimes { found: usize, cap: u64 },
    #[error("field too large: degree {degree} exceeds cap {cap}")]
    FieldTooLarge { degree: usize, cap: usize },
    #[error("not a kernel polynomial")]
    NotKernelPolynomial,
    #[error("degree excluded by isogeny bound: {0}")]
    DegreeExcluded(u64),
    #[error("no rational cyclic {0}-isogeny")]
    NoIsogeny(u64),
    #[error("tower level unavailable: {0}")]
    TowerLevelUnavailable(String),
    #[error("invalid tower spec: {0}")]
    InvalidTower(String),
    #[error("enumeration cap: N = {0} > 4")]
    EnumerationCap(u64),
    #[error("missing fact: {0}")]
    MissingFact(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("schema mismatch: expected version {expected}, found {found}")]
    SchemaMismatch { expected: u32, found: u32 },
    #[error("offline miss: {0}")]
    OfflineMiss(String),
    #[error("unknown label: {0}")]
    UnknownLabel(String),
    #[error("invalid record {label}: {reason}")]
    InvalidRecord { label: String, reason: String },
    #[error("network error: {0}")]
    Network(String),
    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
