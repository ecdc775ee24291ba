//! Alphabets and finite words over them.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// An ordered, duplicate-free set of single-character letters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    letters: Vec<char>,
}

impl Alphabet {
    /// Builds an alphabet from letters in declared order.
    ///
    /// Letters must be distinct, printable, and must not collide with the
    /// involution spec syntax (no commas, no whitespace, no control chars).
    pub fn new<I: IntoIterator<Item = char>>(letters: I) -> Result<Self> {
        let letters: Vec<char> = letters.into_iter().collect();
        if letters.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        for (i, &c) in letters.iter().enumerate() {
            if c.is_control() || c.is_whitespace() || c == ',' {
                return Err(Error::InvalidLetter(c));
            }
            if letters[..i].contains(&c) {
                return Err(Error::DuplicateLetter(c));
            }
        }
        Ok(Self { letters })
    }

    /// Parses an alphabet from a string of letters, e.g. `"abc"`.
    pub fn parse(s: &str) -> Result<Self> {
        Self::new(s.chars())
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[char] {
        &self.letters
    }

    pub fn contains(&self, c: char) -> bool {
        self.letters.contains(&c)
    }

    /// Position of a letter in declared order.
    pub fn index_of(&self, c: char) -> Option<usize> {
        self.letters.iter().position(|&l| l == c)
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &c in &self.letters {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// A finite sequence of letters. Length zero is the empty word.
///
/// Words do not carry their alphabet; membership is checked by the
/// operations that need one. `Ord` is lexicographic on letters, which is
/// the canonical order used for every deduplicated set in this crate.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word {
    letters: Vec<char>,
}

impl Word {
    pub fn new<I: IntoIterator<Item = char>>(letters: I) -> Self {
        Self {
            letters: letters.into_iter().collect(),
        }
    }

    pub const fn empty() -> Self {
        Self {
            letters: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[char] {
        &self.letters
    }

    /// The factor spanning `start..end` (letter indices).
    pub fn slice(&self, start: usize, end: usize) -> Word {
        Word::new(self.letters[start..end].iter().copied())
    }

    /// The prefix of length `n`.
    pub fn prefix(&self, n: usize) -> Word {
        self.slice(0, n)
    }

    /// The suffix of length `n`.
    pub fn suffix(&self, n: usize) -> Word {
        self.slice(self.len() - n, self.len())
    }

    pub fn concat(&self, other: &Word) -> Word {
        Word::new(self.letters.iter().chain(other.letters.iter()).copied())
    }

    /// The rotation `w[k..] w[..k]`.
    pub fn rotated(&self, k: usize) -> Word {
        if self.is_empty() {
            return Word::empty();
        }
        let k = k % self.len();
        Word::new(
            self.letters[k..]
                .iter()
                .chain(self.letters[..k].iter())
                .copied(),
        )
    }
}

impl From<&str> for Word {
    fn from(s: &str) -> Self {
        Word::new(s.chars())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &c in &self.letters {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

/// Collects a sorted, deduplicated set of words.
pub(crate) fn sorted_dedup(mut words: Vec<Word>) -> Vec<Word> {
    words.sort();
    words.dedup();
    words
}
