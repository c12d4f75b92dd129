use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid modulus {0}: need an even ring size 4 <= 2m <= 65536")]
    InvalidModulus(u64),

    #[error("residue {value} out of range for Z_{modulus}")]
    ResidueOutOfRange { value: u64, modulus: u32 },

    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("modulus mismatch: expected Z_{expected}, found Z_{found}")]
    ModulusMismatch { expected: u32, found: u32 },

    #[error("{value} is not a unit of Z_{modulus}")]
    NotAUnit { value: u32, modulus: u32 },

    #[error("Z_{0} is not a power-of-two ring")]
    NotPowerOfTwo(u32),

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("invalid type profile: {0}")]
    InvalidProfile(String),

    #[error("budget exceeded: {what} needs {needed} words, budget is {budget}")]
    BudgetExceeded {
        what: String,
        needed: String,
        budget: u64,
    },

    #[error("inexact division: coefficient {coefficient} at degree {degree} is not divisible by {divisor}")]
    NotDivisible {
        degree: usize,
        coefficient: String,
        divisor: String,
    },

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("code does not have the required parameters: {0}")]
    ParameterMismatch(String),

    #[error("soundness alarm: {0}")]
    SoundnessAlarm(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn budget(what: impl Into<String>, needed: impl ToString, budget: u64) -> Self {
        Error::BudgetExceeded {
            what: what.into(),
            needed: needed.to_string(),
            budget,
        }
    }

    /// True when the failure is a size limit rather than a defect in the input.
    pub fn is_infeasible(&self) -> bool {
        matches!(self, Error::BudgetExceeded { .. })
    }
}
