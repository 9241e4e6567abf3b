//! Crate-wide error type. Every variant names the violated constraint so
//! callers (and the CLI) can surface structured rejections.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("fractional part needs a positive modulus, got q = {q}")]
    NonPositiveModulus { q: i64 },

    #[error("integer square root of a negative number")]
    NegativeSqrtInput,

    #[error("rational function with zero denominator polynomial")]
    ZeroDenominator,

    #[error("evaluation point is a pole of the rational function")]
    PoleAtEvaluationPoint,

    #[error("m = {m} out of range: the cover degree must satisfy m >= 3")]
    MOutOfRange { m: u32 },

    #[error("N = {n} out of range: need at least 4 branch points")]
    NOutOfRange { n: usize },

    #[error("declared N = {declared} but {actual} local monodromies were given")]
    LengthMismatch { declared: usize, actual: usize },

    #[error("monodromy a[{index}] = {value} out of range: need 1 <= a_i <= m-1 = {}", m - 1)]
    MonodromyOutOfRange { index: usize, value: u32, m: u32 },

    #[error("sum of local monodromies is {sum_mod_m} mod {m}, need 0")]
    SumNotZeroModM { sum_mod_m: u32, m: u32 },

    #[error("gcd(m, a_1, ..., a_N) = {gcd}, need 1")]
    GcdNotOne { gcd: u32 },

    #[error("index {index} out of range for {len} branch points")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("genus {genus} is below 4; the criterion is not defined there")]
    GenusTooSmall { genus: u64 },

    #[error("invariant quadric dimension is negative ({value}): the non-hyperelliptic conormal sequence fails for this family")]
    NegativeDimension { value: i64 },

    #[error("gonality k = {k} out of range: need k >= 3")]
    GonalityTooSmall { k: u64 },

    #[error("base locus degree {deg_b} out of range: need deg B < k - 2 = {}", k - 2)]
    BaseLocusDegreeTooLarge { deg_b: u64, k: u64 },

    #[error("the eigenspace exclusion criterion does not fire for this family (no n with d_n >= 2, d_(m-n) >= 2, n != m-n)")]
    NoExclusionIndex,

    #[error("n = {n} does not satisfy the exclusion conditions d_n >= 2, d_(m-n) >= 2, n != m-n")]
    ExclusionIndexNotFiring { n: u32 },

    #[error("branch points must be pairwise distinct")]
    DuplicateBranchPoints,

    #[error("degenerate pencil: every logarithmic-derivative coefficient vanishes")]
    DegeneratePencil,

    #[error("witness search exhausted its budget of {budget} candidates")]
    BudgetExhausted { budget: usize },

    #[error("allowlist line {line}: {reason}")]
    Allowlist { line: usize, reason: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Stable machine-readable name of the violated constraint.
    pub fn name(&self) -> &'static str {
        match self {
            Error::NonPositiveModulus { .. } => "NonPositiveModulus",
            Error::NegativeSqrtInput => "NegativeSqrtInput",
            Error::ZeroDenominator => "ZeroDenominator",
            Error::PoleAtEvaluationPoint => "PoleAtEvaluationPoint",
            Error::MOutOfRange { .. } => "MOutOfRange",
            Error::NOutOfRange { .. } => "NOutOfRange",
            Error::LengthMismatch { .. } => "LengthMismatch",
            Error::MonodromyOutOfRange { .. } => "MonodromyOutOfRange",
            Error::SumNotZeroModM { .. } => "SumNotZeroModM",
            Error::GcdNotOne { .. } => "GcdNotOne",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::GenusTooSmall { .. } => "GenusTooSmall",
            Error::NegativeDimension { .. } => "NegativeDimension",
            Error::GonalityTooSmall { .. } => "GonalityTooSmall",
            Error::BaseLocusDegreeTooLarge { .. } => "BaseLocusDegreeTooLarge",
            Error::NoExclusionIndex => "NoExclusionIndex",
            Error::ExclusionIndexNotFiring { .. } => "ExclusionIndexNotFiring",
            Error::DuplicateBranchPoints => "DuplicateBranchPoints",
            Error::DegeneratePencil => "DegeneratePencil",
            Error::BudgetExhausted { .. } => "BudgetExhausted",
            Error::Allowlist { .. } => "Allowlist",
            Error::Io(_) => "Io",
        }
    }
}
