//! Antimorphic involutions: self-inverse letter maps extended to words by
//! reversing and mapping letter-wise.

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::word::{Alphabet, Word};

/// A self-inverse bijection on an alphabet's letters, together with its
/// antimorphic extension to words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Involution {
    alphabet: Alphabet,
    // images[i] is the image of alphabet.letters()[i]
    images: Vec<char>,
}

impl Involution {
    /// Parses a spec string like `"ab,c"`: each comma-separated group is
    /// either a pair `xy` (x and y swap) or a single letter `x` (fixed).
    /// Every alphabet letter must appear exactly once across groups.
    pub fn parse(spec: &str, alphabet: &Alphabet) -> Result<Self> {
        let n = alphabet.len();
        let mut images: Vec<Option<char>> = alloc::vec![None; n];
        let mut assign = |letter: char, image: char| -> Result<()> {
            let idx = alphabet.index_of(letter).ok_or(Error::UnknownLetter(letter))?;
            if images[idx].is_some() {
                return Err(Error::DuplicateLetter(letter));
            }
            images[idx] = Some(image);
            Ok(())
        };
        for group in spec.split(',') {
            let letters: Vec<char> = group.chars().collect();
            match letters[..] {
                [x] => assign(x, x)?,
                [x, y] if x == y => {
                    // "aa" assigns a twice
                    assign(x, y)?;
                    assign(y, x)?;
                }
                [x, y] => {
                    assign(x, y)?;
                    assign(y, x)?;
                }
                _ => return Err(Error::MalformedGroup(letters.len())),
            }
        }
        let mut resolved = Vec::with_capacity(n);
        for (i, image) in images.into_iter().enumerate() {
            match image {
                Some(c) => resolved.push(c),
                None => return Err(Error::IncompleteSpec(alphabet.letters()[i])),
            }
        }
        Ok(Self {
            alphabet: alphabet.clone(),
            images: resolved,
        })
    }

    /// The identity letter map; the extension is then plain reversal.
    pub fn identity(alphabet: &Alphabet) -> Self {
        Self {
            alphabet: alphabet.clone(),
            images: alphabet.letters().to_vec(),
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn is_identity(&self) -> bool {
        self.images == self.alphabet.letters()
    }

    /// The image of a single letter.
    pub fn letter(&self, c: char) -> Result<char> {
        let idx = self.alphabet.index_of(c).ok_or(Error::AlphabetMismatch(c))?;
        Ok(self.images[idx])
    }

    /// Verifies that every letter of `w` belongs to this alphabet.
    pub fn check_word(&self, w: &Word) -> Result<()> {
        for &c in w.letters() {
            if !self.alphabet.contains(c) {
                return Err(Error::AlphabetMismatch(c));
            }
        }
        Ok(())
    }

    /// The antimorphic image of a word: letters mapped and order reversed.
    pub fn apply(&self, w: &Word) -> Result<Word> {
        let mut out = Vec::with_capacity(w.len());
        for &c in w.letters().iter().rev() {
            out.push(self.letter(c)?);
        }
        Ok(Word::new(out))
    }

    /// Canonical spec string: letters visited in declared order, pairs
    /// rendered once as `xy`, fixed letters as `x`, groups joined by commas.
    pub fn spec_string(&self) -> String {
        let mut groups: Vec<String> = Vec::new();
        let mut seen = alloc::vec![false; self.alphabet.len()];
        for (i, &c) in self.alphabet.letters().iter().enumerate() {
            if seen[i] {
                continue;
            }
            seen[i] = true;
            let image = self.images[i];
            if image == c {
                groups.push(String::from_iter([c]));
            } else {
                let j = self.alphabet.index_of(image).expect("image stays in alphabet");
                seen[j] = true;
                groups.push(String::from_iter([c, image]));
            }
        }
        groups.join(",")
    }
}

/// Every self-inverse bijection on the alphabet, exactly once, sorted by
/// image sequence in declared letter order (so the identity comes first).
pub fn enumerate_involutions(alphabet: &Alphabet) -> Vec<Involution> {
    let n = alphabet.len();
    let letters = alphabet.letters();
    let mut images: Vec<Option<usize>> = alloc::vec![None; n];
    let mut all: Vec<Vec<usize>> = Vec::new();
    fn extend(images: &mut Vec<Option<usize>>, all: &mut Vec<Vec<usize>>) {
        match images.iter().position(Option::is_none) {
            None => all.push(images.iter().map(|i| i.unwrap()).collect()),
            Some(first) => {
                images[first] = Some(first);
                extend(images, all);
                images[first] = None;
                for partner in first + 1..images.len() {
                    if images[partner].is_none() {
                        images[first] = Some(partner);
                        images[partner] = Some(first);
                        extend(images, all);
                        images[first] = None;
                        images[partner] = None;
                    }
                }
            }
        }
    }
    extend(&mut images, &mut all);
    all.sort();
    all.into_iter()
        .map(|perm| Involution {
            alphabet: alphabet.clone(),
            images: perm.into_iter().map(|i| letters[i]).collect(),
        })
        .collect()
}
