use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("series `{series}` has a non-positive value in {year}")]
    NonPositiveValue { series: String, year: i32 },

    #[error("series `{series}` has a non-finite value in {year}")]
    NonFiniteValue { series: String, year: i32 },

    #[error("series is too short: need more than {needed} observations, got {got}")]
    SeriesTooShort { needed: usize, got: usize },

    #[error("series `{series}` is empty")]
    EmptySeries { series: String },

    #[error("series `{series}` has a length mismatch: {years} years vs {values} values")]
    LengthMismatch {
        series: String,
        years: usize,
        values: usize,
    },

    #[error("year axis has a gap or is not increasing at {year}")]
    YearGap { year: i32 },

    #[error("series share no common years")]
    NoCommonYears,

    #[error("duplicate variable name `{0}`")]
    DuplicateName(String),

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("design matrix is rank deficient")]
    RankDeficient,

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("covariance matrix is singular")]
    SingularCovariance,

    #[error("series has zero variance after differencing")]
    ZeroVariance,

    #[error("product-moment matrix is singular")]
    SingularMomentMatrix,

    #[error("rank {rank} out of range for {k} variables")]
    RankOutOfRange { rank: usize, k: usize },

    #[error("no embedded critical values for {0} common trends")]
    DimensionUnsupported(usize),

    #[error("normalization coefficient on `{0}` is zero")]
    ZeroNormalizationCoefficient(String),

    #[error("unstable data-generating process: {0}")]
    UnstableSpec(String),

    #[error("need at least {needed} variables, got {got}")]
    NotEnoughVariables { needed: usize, got: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}
