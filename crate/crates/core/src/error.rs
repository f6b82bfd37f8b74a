use thiserror::Error;

/// Errors raised by the arithmetic, linear algebra and CLI layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} requires a nonzero argument")]
    ZeroArgument(&'static str),
    #[error("unsupported field discriminant D={0}; expected one of 1, 2, 3, 7, 11")]
    UnsupportedField(i64),
    #[error("sigma_tilde needs an even exponent, got {0}")]
    OddExponent(u32),
    #[error("generator {generator} is not available for D={d}")]
    UnavailableGenerator { generator: &'static str, d: u32 },
    #[error("matrix must be square, got {rows}x{cols}")]
    NonSquare { rows: usize, cols: usize },
    #[error("matrix dimensions do not match: {0}")]
    DimensionMismatch(String),
    #[error("matrix determinant is not 1")]
    NonUnitDeterminant,
    #[error("weight k={0} is out of range (0..={max})", max = crate::MAX_WEIGHT)]
    WeightOutOfRange(usize),
    #[error("cannot parse {what}: {input:?}")]
    Parse { what: &'static str, input: String },
    #[error("i/o failure: {0}")]
    Io(String),
    #[error("invalid arguments: {0}")]
    Usage(String),
}

impl Error {
    /// Short machine-readable tag used in structured CLI errors.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DivisionByZero => "division_by_zero",
            Error::ZeroArgument(_) => "zero_argument",
            Error::UnsupportedField(_) => "unsupported_field",
            Error::OddExponent(_) => "odd_exponent",
            Error::UnavailableGenerator { .. } => "unavailable_generator",
            Error::NonSquare { .. } => "non_square",
            Error::DimensionMismatch(_) => "dimension_mismatch",
            Error::NonUnitDeterminant => "non_unit_determinant",
            Error::WeightOutOfRange(_) => "weight_out_of_range",
            Error::Parse { .. } => "parse_error",
            Error::Io(_) => "io",
            Error::Usage(_) => "usage",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
