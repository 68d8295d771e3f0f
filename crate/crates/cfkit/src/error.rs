use thiserror::Error;

/// Crate-wide error type. Variants mirror the failure modes of the public
/// operations; `class` groups them for exit-code mapping in the CLI.
#[derive(Debug, Error)]
pub enum Error {
    /// A sequence tail's denominator polynomial vanished at an evaluated index.
    #[error("sequence tail denominator vanishes at n = {index}")]
    TailPole { index: u64 },

    /// The canonical denominator B_n is zero at the requested depth.
    #[error("convergent undefined at depth {depth} (B_n = 0)")]
    UndefinedConvergent { depth: usize },

    #[error("unknown preset `{name}` (expected conjecture-pi4, euler-pi4 or gauss-pi4)")]
    UnknownPreset { name: String },

    /// A Gauss d-coefficient denominator (c+2k-1)(c+2k) or (c+2k)(c+2k+1) vanished.
    #[error("Gauss d-coefficient denominator vanishes at n = {n}")]
    DCoefficientPole { n: u64 },

    /// Scaling sequence evaluates to zero (or cannot be formed) at an index.
    #[error("scaling sequence is zero or undefined at n = {index}")]
    ZeroScaling { index: u64 },

    /// The ratio-test limit cannot be computed symbolically for this spec.
    #[error("symbolic ratio limit unavailable (tail is not a single closed form)")]
    SymbolicLimitUnavailable,

    /// A partial denominator needed by the ratio test is zero.
    #[error("division by zero: partial denominator b_n = 0 at n = {index}")]
    DivisionByZero { index: u64 },

    /// The certified bracket is too wide to certify the measured errors.
    #[error("bracket too wide to certify the requested error measurement")]
    BracketTooWide,

    /// A rational or rational-function denominator is identically zero.
    #[error("denominator is zero")]
    ZeroDenominator,

    #[error("syntax error at byte {pos}: {message}")]
    Syntax { pos: usize, message: String },

    #[error("`pi` is not allowed in sequence expressions (byte {pos})")]
    PiNotAllowed { pos: usize },

    #[error("expression is not affine in pi (byte {pos})")]
    NonAffinePi { pos: usize },

    #[error("invalid rational literal `{0}` (expected `p` or `p/q`)")]
    InvalidRational(String),

    #[error("invalid CF spec file: {0}")]
    FileFormat(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Coarse classification used by the CLI's exit-code contract.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    /// Bad input text or arguments (exit 2).
    Usage,
    /// A numeric failure during evaluation (exit 3).
    Numeric,
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        match self {
            Error::UnknownPreset { .. }
            | Error::Syntax { .. }
            | Error::PiNotAllowed { .. }
            | Error::NonAffinePi { .. }
            | Error::InvalidRational(_)
            | Error::FileFormat(_)
            | Error::InvalidArgument(_)
            | Error::ZeroDenominator
            | Error::Io(_) => ErrorClass::Usage,
            _ => ErrorClass::Numeric,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
