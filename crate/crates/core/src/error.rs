//! Error type shared by all modules of the crate.

use thiserror::Error;

/// Errors reported by partition validation, coefficient extraction and the
/// pushforward evaluators.
///
/// `UnderTruncated` and `OddCoefficient` indicate an internal consistency
/// problem (a truncation plan that was too shallow, or a class that cannot be
/// halved); everything else rejects invalid input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid shape: need n >= 1 and 1 <= d <= n, got n={n}, d={d}")]
    InvalidShape { n: u32, d: u32 },

    #[error("parts must be strictly decreasing positive integers")]
    NotStrict,

    #[error("parts must be weakly decreasing nonnegative integers")]
    NotWeaklyDecreasing,

    #[error("expected exactly {expected} parts, got {got}")]
    WrongPartCount { expected: u32, got: u32 },

    #[error("part {part} exceeds the bound {max} at position {position}")]
    PartOutOfRange { part: u32, max: u32, position: usize },

    #[error("lambda has {got} parts, at most {max} allowed")]
    LambdaTooLong { max: u32, got: u32 },

    #[error("lambda part {part} exceeds 2n-d = {max}")]
    LambdaPartTooBig { part: u32, max: u32 },

    #[error("inadmissible: {a}+{b} = 2n+1")]
    Inadmissible { a: u32, b: u32 },

    #[error("nu is not contained in mu")]
    NotContained,

    #[error("flag index {m} outside 0..={max}")]
    FlagIndexOutOfRange { m: u32, max: u32 },

    #[error("chern roots are only defined in the rooted-flag model")]
    NotRootedModel,

    #[error("variable index {index} out of range for {num_vars} variables")]
    VarOutOfRange { index: usize, num_vars: usize },

    #[error("input class has {got} variables, the shape demands {expected}")]
    WrongVariableCount { expected: usize, got: usize },

    #[error(
        "coefficient at exponent {requested} in t{var} needs terms below the truncation floor {floor}"
    )]
    UnderTruncated {
        var: usize,
        requested: i64,
        floor: i64,
    },

    #[error("class not divisible by 2")]
    OddCoefficient,

    #[error("halving requires an even-orthogonal shape with d = n")]
    HalveShape,
}

pub type Result<T> = std::result::Result<T, Error>;
