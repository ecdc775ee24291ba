use core::fmt;

/// Errors raised by word and involution operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A letter in an involution spec is not part of the alphabet.
    UnknownLetter(char),
    /// A letter is assigned more than once in an involution spec.
    DuplicateLetter(char),
    /// An alphabet letter is missing from an involution spec.
    IncompleteSpec(char),
    /// An involution spec group is not one or two letters long.
    MalformedGroup(usize),
    /// A word contains a letter outside the involution's alphabet.
    AlphabetMismatch(char),
    /// The operation is undefined on the empty word.
    EmptyWord,
    /// A letter is not a single printable character.
    InvalidLetter(char),
    /// An alphabet must contain at least one letter.
    EmptyAlphabet,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::UnknownLetter(c) => write!(f, "letter '{c}' is not in the alphabet"),
            Error::DuplicateLetter(c) => write!(f, "letter '{c}' appears twice in the involution spec"),
            Error::IncompleteSpec(c) => write!(f, "letter '{c}' is missing from the involution spec"),
            Error::MalformedGroup(n) => write!(f, "involution spec group has {n} letters, expected 1 or 2"),
            Error::AlphabetMismatch(c) => write!(f, "word letter '{c}' is outside the involution's alphabet"),
            Error::EmptyWord => write!(f, "operation is undefined on the empty word"),
            Error::InvalidLetter(c) => write!(f, "'{}' is not a usable letter", c.escape_default()),
            Error::EmptyAlphabet => write!(f, "alphabet must contain at least one letter"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
