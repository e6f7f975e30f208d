use thiserror::Error;

/// Error type shared by every module of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("point set is not generic: {0}")]
    InvalidPointSet(String),

    #[error("the empty permutation has no components")]
    EmptyPermutation,

    #[error("length {requested} exceeds the oracle's trusted domain of {trusted}")]
    DomainExceeded { requested: usize, trusted: usize },

    #[error("letter {0:?} is not in the alphabet")]
    UnknownLetter(String),

    #[error("permutation is not in the widdershins closure")]
    NotInClosure,

    #[error("spiral length must be at least 4, got {0}")]
    SpiralTooShort(usize),

    #[error("size {got} is too large, maximum is {max}")]
    TooLarge { got: usize, max: usize },

    #[error("size {got} is too small, minimum is {min}")]
    TooSmall { got: usize, min: usize },

    #[error("labelled graphs use different label posets")]
    PosetMismatch,

    #[error("cannot delete a vertex from an empty graph")]
    CannotDelete,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
