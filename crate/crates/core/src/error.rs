use thiserror::Error;

use crate::word::Word;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("word length {len} exceeds the configured cap of {cap}")]
    CapExceeded { len: usize, cap: usize },

    #[error("word `{0}` is not Catalan")]
    NotCatalan(Word),

    #[error("the scalar nabla^(m)(w) is not defined for the trivial word")]
    TrivialWord,

    #[error("profile must have odd length with at least one peak, got {0} entries")]
    DegenerateProfile(usize),

    #[error("inexact division: {0}")]
    InexactDivision(String),

    #[error("series cutoffs differ ({left} vs {right})")]
    CutoffMismatch { left: usize, right: usize },

    #[error("series constant term must be {expected}")]
    ConstantTerm { expected: &'static str },

    #[error("{0}")]
    Domain(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
