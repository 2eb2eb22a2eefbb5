use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid ring parameters m={m}, s={s}: need m >= 1 and s >= 2")]
    InvalidSpec { m: u32, s: u32 },

    #[error("basis of size (m+1)^s for m={m}, s={s} exceeds the limit of {limit} monomials")]
    SpecTooLarge { m: u32, s: u32, limit: u64 },

    #[error("operands live in different rings")]
    SpecMismatch,

    #[error("exponent vector {exponents:?} invalid for m={m}, s={s}")]
    BadExponents { exponents: Vec<u32>, m: u32, s: u32 },

    #[error("rank {rank} out of range for a basis of size {len}")]
    RankOutOfRange { rank: usize, len: usize },

    #[error("variable index {index} out of range ({detail})")]
    IndexOutOfRange { index: u32, detail: &'static str },

    #[error("element must be homogeneous of degree at most m")]
    NotHomogeneous,

    #[error("could not parse {what}: {input:?}")]
    Parse { what: &'static str, input: String },

    #[error("undetermined: {0}")]
    Undetermined(String),

    #[error("ideal of zero-divisors differs from the kernel in degree {degree}; {vector} lies in exactly one of them")]
    GeneratorsMismatch { degree: u32, vector: String },

    #[error("internal defect: {0}")]
    Defect(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// True for failures caused by a resource cap rather than a wrong input or a bug.
    pub fn is_undetermined(&self) -> bool {
        matches!(self, Error::Undetermined(_) | Error::SpecTooLarge { .. })
    }
}
