use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("inconsistent group specification: {0}")]
    InconsistentSpec(String),
    #[error("group order {order} exceeds the order cap {cap}")]
    OrderCapExceeded { order: usize, cap: usize },
    #[error("subgroup is not normal: {0}")]
    NotNormal(String),
    #[error("{0} is not abelian")]
    NotAbelian(String),
    #[error("elements live in different groups")]
    GroupMismatch,
    #[error("group is not metabelian")]
    NotMetabelian,
    #[error("{a} and {m} are not coprime")]
    NotCoprime { a: u64, m: u64 },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("not a central idempotent")]
    NotCentralIdempotent,
    #[error("non-integer dimension {0}")]
    NonIntegerDimension(String),
    #[error("not a strong Shoda pair: {0}")]
    NotStrongShodaPair(String),
    #[error("unknown family {0}")]
    UnknownFamily(String),
    #[error("inconsistent family parameters: {0}")]
    InconsistentFamilyParams(String),
    #[error("not a p-group")]
    NotPGroup,
    #[error("no curated witness named {0}")]
    UnknownWitness(String),
    #[error("{0}")]
    Io(String),
}

impl Error {
    /// Process exit code used by the CLI for this error.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } | Error::InconsistentSpec(_) | Error::UnknownFamily(_) => 2,
            Error::OrderCapExceeded { .. } => 3,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
