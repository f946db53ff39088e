use core::fmt;

/// Errors raised by the numerical core.
#[derive(Clone, Debug, PartialEq)]
pub enum Error {
    /// An arithmetic result left the finite range of binary64.
    NonFinite,
    /// Inverse of the zero quaternion.
    DivisionByZero,
    /// Grid shape or spacing rejected.
    InvalidGrid(&'static str),
    /// Sample buffer does not match the grid.
    SampleCountMismatch { expected: usize, found: usize },
    /// A sample was NaN or infinite.
    NonFiniteSample { index: usize },
    /// Lebesgue exponent below one (or NaN).
    InvalidExponent,
    /// `exp(alpha |x|^2)` overflows somewhere on the grid.
    WeightOverflow,
    /// Scaling factor that does not map grid nodes onto grid nodes.
    IncommensurateScaling,
    /// Two fields or spectra were built on different grids.
    GridMismatch,
    /// A parameter that must be positive (or otherwise constrained) was not.
    InvalidParameter(&'static str),
    /// Too few nodes above the underflow threshold for an envelope fit.
    SpectrumUnderflow,
    /// Both Cowling-Price exponents were infinite.
    InfiniteExponents,
    /// No subcritical witness exists for `alpha * beta >= pi^2`.
    NoSubcriticalWitness,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonFinite => f.write_str("non-finite result"),
            Error::DivisionByZero => f.write_str("division by zero quaternion"),
            Error::InvalidGrid(why) => write!(f, "invalid grid: {why}"),
            Error::SampleCountMismatch { expected, found } => {
                write!(f, "sample count mismatch: expected {expected}, found {found}")
            }
            Error::NonFiniteSample { index } => write!(f, "non-finite value at sample {index}"),
            Error::InvalidExponent => f.write_str("invalid exponent"),
            Error::WeightOverflow => f.write_str("weight overflow; shrink extent or α"),
            Error::IncommensurateScaling => f.write_str("scaling check requires commensurate grids"),
            Error::GridMismatch => f.write_str("grid mismatch"),
            Error::InvalidParameter(what) => write!(f, "invalid parameter: {what}"),
            Error::SpectrumUnderflow => f.write_str("spectrum underflow; enlarge grid"),
            Error::InfiniteExponents => f.write_str("min(p,q) must be finite"),
            Error::NoSubcriticalWitness => f.write_str("no subcritical witness exists"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
