use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("group closure exceeded the order cap of {cap}")]
    OrderCapExceeded { cap: usize },

    #[error("malformed permutation: {0}")]
    MalformedPermutation(String),

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("group is not solvable")]
    NotSolvable,

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("prime {p} does not divide the group order {order}")]
    PrimeDoesNotDivide { p: u64, order: usize },

    #[error("no working prime congruent to 1 mod {exponent} found below {bound}")]
    NoWorkingPrime { exponent: u64, bound: u64 },

    #[error("eigenspace splitting did not terminate after {attempts} attempts")]
    SplitFailure { attempts: usize },

    #[error("character lift inconsistent: {0}")]
    LiftInconsistent(String),

    #[error("character table does not belong to the given subgroup")]
    TableMismatch,

    #[error("codegree of row {row} is not an integer")]
    NonIntegralCodegree { row: usize },

    #[error("subgroup is not abelian")]
    NotAbelian,

    #[error("subgroups do not form a complemented pair: {0}")]
    NotComplemented(String),

    #[error("bad action: {0}")]
    BadAction(String),

    #[error("invalid parameter: {0}")]
    BadParameter(String),

    #[error("cod_p is empty for p = {p} although p divides |G| and O_p'(G) = 1")]
    EmptyCodP { p: u64 },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
