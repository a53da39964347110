use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("{0} is not a prime power")]
    NotPrimePower(u64),

    #[error("exponent t must be at least 1")]
    ZeroExponent,

    #[error("modulus overflow computing {p}^{t}")]
    ModulusOverflow { p: u64, t: u32 },

    #[error("modulus mismatch: Z_{left} vs Z_{right}")]
    ModulusMismatch { left: u64, right: u64 },

    #[error("matrix must have at least one row and one column")]
    EmptyMatrix,

    #[error("row {row} has {found} entries, expected {expected}")]
    RaggedRow { row: usize, found: usize, expected: usize },

    #[error("entry out of range: {value} at row {row}, column {col} (modulus {q})")]
    EntryOutOfRange { row: usize, col: usize, value: u64, q: u64 },

    #[error("rank zero: generator matrix spans the zero code")]
    RankZero,

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("code has p^{log_p_size} codewords, above the enumeration budget of {budget}")]
    CodewordBudget { log_p_size: u32, budget: u64 },

    #[error("enumeration stopped after {examined} candidates: budget of {budget} exhausted")]
    CodeBudget { examined: u64, budget: u64 },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("not applicable: {0}")]
    Inapplicable(String),
}

pub type Result<T> = std::result::Result<T, Error>;
