use thiserror::Error;

/// Malformed word, rational or continued-fraction text.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("invalid letter {token:?} at position {position} in word {input:?}")]
    BadLetter {
        input: String,
        token: char,
        position: usize,
    },
    #[error("malformed rational {input:?}: {reason}")]
    BadRational { input: String, reason: String },
    #[error("malformed continued fraction {input:?}: {reason}")]
    BadContinuedFraction { input: String, reason: String },
}

/// Domain errors from Farey-tree and enumeration operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FareyError {
    #[error("{0} has no continued fraction")]
    Infinite(String),
    #[error("{0} is negative; map it through B -> B^-1 first")]
    Negative(String),
    #[error("{0} has no distinguished neighbors")]
    NoDistinguishedNeighbors(String),
    #[error("{value} is outside the domain of {operation}: {reason}")]
    OutOfDomain {
        operation: &'static str,
        value: String,
        reason: &'static str,
    },
    #[error("zero denominator with numerator {0}")]
    ZeroDenominator(String),
    #[error("invalid continued fraction digits {0}")]
    NonCanonicalDigits(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExponentError {
    #[error("generator {0} occurs with both signs")]
    MixedSigns(char),
    #[error("word must contain both generators")]
    MissingGenerator,
    #[error("word is not cyclically reduced")]
    NotCyclicallyReduced,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CuttingError {
    #[error("strand diagram of the empty word")]
    EmptyWord,
    #[error("word is not cyclically reduced")]
    NotCyclicallyReduced,
    #[error("{0} has p*q odd; no palindromic representative exists")]
    OddParity(String),
    #[error("slope {0} is not a finite positive rational")]
    UnsupportedSlope(String),
    #[error("start offset {offset} out of range for a word of length {len}")]
    OffsetOutOfRange { offset: usize, len: usize },
}
