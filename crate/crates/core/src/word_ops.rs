//! Classical word primitives: reversal, palindromes, powers, primitivity.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::involution::Involution;
use crate::word::Word;

/// The reversal of a word.
pub fn reverse(w: &Word) -> Word {
    Word::new(w.letters().iter().rev().copied())
}

/// True iff `w` equals its reversal.
pub fn is_palindrome(w: &Word) -> bool {
    let letters = w.letters();
    let n = letters.len();
    (0..n / 2).all(|i| letters[i] == letters[n - 1 - i])
}

/// True iff `w` equals its antimorphic image under `theta`.
pub fn is_theta_palindrome(w: &Word, theta: &Involution) -> Result<bool> {
    Ok(theta.apply(w)? == *w)
}

/// `w` concatenated `k` times; `k = 0` yields the empty word.
pub fn power(w: &Word, k: usize) -> Word {
    let mut letters = Vec::with_capacity(w.len() * k);
    for _ in 0..k {
        letters.extend_from_slice(w.letters());
    }
    Word::new(letters)
}

/// The unique primitive word whose power reconstitutes the original.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimitiveRoot {
    pub root: Word,
    pub exponent: usize,
}

/// Finds the primitive root as the shortest divisor-length prefix that
/// periodically generates `w`.
pub fn primitive_root(w: &Word) -> Result<PrimitiveRoot> {
    let n = w.len();
    if n == 0 {
        return Err(Error::EmptyWord);
    }
    let letters = w.letters();
    for d in 1..=n {
        if n % d != 0 {
            continue;
        }
        if (d..n).all(|i| letters[i] == letters[i - d]) {
            return Ok(PrimitiveRoot {
                root: w.prefix(d),
                exponent: n / d,
            });
        }
    }
    unreachable!("d = n always generates w");
}

/// True iff `w` is not a proper power of a shorter word.
pub fn is_primitive(w: &Word) -> Result<bool> {
    Ok(primitive_root(w)?.exponent == 1)
}
