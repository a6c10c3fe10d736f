use thiserror::Error;

use crate::series::{TruncationProfile, Var};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("truncation profiles differ: {0} vs {1}")]
    ProfileMismatch(TruncationProfile, TruncationProfile),

    #[error("invalid truncation profile: y-window [{y_min}, {y_max}] must contain 0")]
    InvalidYWindow { y_min: i32, y_max: i32 },

    #[error("y exponent {exponent} escapes strict window [{y_min}, {y_max}]")]
    YWindowOverflow {
        exponent: i32,
        y_min: i32,
        y_max: i32,
    },

    #[error("expected a single monomial, found {0} terms")]
    NotMonomial(usize),

    #[error("monomial has no positive q, t or u exponent; 1/(1 - m) does not terminate")]
    NonInvertibleMonomial,

    #[error("series has a nonzero constant term")]
    NonzeroConstantTerm,

    #[error("series has a term without positive q, t or u degree; exp/log do not terminate")]
    NotNilpotent,

    #[error("base of a power must have constant term 1")]
    BaseConstantNotOne,

    #[error("exponent of a power must not depend on q or t")]
    ExponentNotConstant,

    #[error("exponent {exponent} of {var} lies outside the truncation profile")]
    OutOfProfile { var: Var, exponent: i64 },

    #[error("cannot substitute 0 for y in a series with negative y exponents")]
    ZeroSubstitution,

    #[error("cannot rename {from} to {to}: {reason}")]
    InvalidRename {
        from: Var,
        to: Var,
        reason: &'static str,
    },

    #[error("coefficient {0} is not an integer")]
    NotInteger(String),

    #[error("invalid cycle type: {0}")]
    InvalidCycleType(String),

    #[error("{0}")]
    Usage(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}
