use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("alphabet size {0} out of range (supported: 1..=16)")]
    AlphabetSize(usize),
    #[error("letter {letter} is not in an alphabet of size {alphabet_size}")]
    LetterOutOfRange { letter: u8, alphabet_size: usize },
    #[error("invalid character {0:?} in word")]
    BadCharacter(char),
    #[error("invalid exponent {0:?}")]
    BadExponent(String),
    #[error("exponent must be greater than 1, got {0}")]
    ExponentTooSmall(String),
    #[error("invalid freeness spec {0:?}: expected \"NUM/DEN[+] @ L\"")]
    BadSpec(String),
    #[error("minimum period must be at least 1")]
    ZeroPeriod,
    #[error("{period} is not a period of a word of length {len}")]
    NotAPeriod { period: usize, len: usize },
    #[error("search needs an alphabet of at least 2 letters, got {0}")]
    AlphabetTooSmall(usize),
    #[error("budget limits must be positive")]
    EmptyBudget,
    #[error("target length must be at least 1")]
    ZeroTarget,
    #[error("invalid morphism: {0}")]
    BadMorphism(String),
    #[error("morphism is not uniform")]
    NotUniform,
    #[error("search budget exceeded after {nodes_visited} nodes")]
    BudgetExceeded { nodes_visited: u64 },
    #[error("search tree exhausted at length {max_len}")]
    SearchExhausted { max_len: usize },
    #[error("enumeration cap of {cap} nodes exceeded")]
    CapExceeded { cap: u64 },
    #[error("checkpoint: {0}")]
    Checkpoint(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
