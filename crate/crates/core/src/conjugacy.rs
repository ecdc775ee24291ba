//! Conjugacy classes and theta-conjugate sets.
//!
//! For a word `w` and antimorphic involution theta, the theta-conjugates
//! are the values `theta(v)u` over all splits `w = uv`. The set always
//! contains `w` (split `v` empty) and `theta(w)` (split `u` empty), and
//! has at most `|w|+1` elements. Words missing that maximum admit a
//! deficiency decomposition `(head link)^(repeats+1) head tail` with
//! `head` and `link` theta-palindromes, found here by exhaustive search.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::involution::Involution;
use crate::word::{sorted_dedup, Word};
use crate::word_ops::{is_theta_palindrome, power};

/// The conjugacy class of a word: all rotations, deduplicated and sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugateSet {
    pub source: Word,
    pub elements: Vec<Word>,
}

/// All rotations `vu` over splits `w = uv`. `C(lambda) = {lambda}`.
pub fn conjugates(w: &Word) -> ConjugateSet {
    let elements = if w.is_empty() {
        alloc::vec![Word::empty()]
    } else {
        sorted_dedup((0..w.len()).map(|k| w.rotated(k)).collect())
    };
    ConjugateSet {
        source: w.clone(),
        elements,
    }
}

/// One split of the source word and the theta-conjugate it produces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaConjugateEntry {
    /// Length of the prefix `u` in the split `w = uv`.
    pub split: usize,
    /// The value `theta(v)u`.
    pub value: Word,
}

/// All theta-conjugates of a word, with split provenance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaConjugateSet {
    pub source: Word,
    pub theta: Involution,
    /// One entry per split, in split order `0..=|w|`.
    pub entries: Vec<ThetaConjugateEntry>,
    /// Deduplicated values in canonical order.
    pub elements: Vec<Word>,
}

impl ThetaConjugateSet {
    pub fn contains(&self, w: &Word) -> bool {
        self.elements.binary_search(w).is_ok()
    }
}

/// Computes `{theta(v)u : w = uv}` with one entry per split.
pub fn theta_conjugates(w: &Word, theta: &Involution) -> Result<ThetaConjugateSet> {
    theta.check_word(w)?;
    let mut entries = Vec::with_capacity(w.len() + 1);
    for k in 0..=w.len() {
        let prefix = w.prefix(k);
        let rest = w.slice(k, w.len());
        let value = theta.apply(&rest)?.concat(&prefix);
        entries.push(ThetaConjugateEntry { split: k, value });
    }
    let elements = sorted_dedup(entries.iter().map(|e| e.value.clone()).collect());
    Ok(ThetaConjugateSet {
        source: w.clone(),
        theta: theta.clone(),
        entries,
        elements,
    })
}

/// True iff the theta-conjugate set reaches its maximum size `|w|+1`.
pub fn is_theta_maximal(w: &Word, theta: &Involution) -> Result<bool> {
    Ok(theta_conjugates(w, theta)?.elements.len() == w.len() + 1)
}

/// Decomposition `w = (head link)^(repeats+1) head tail` certifying that
/// the theta-conjugate set of `w` is below its maximum size. `head` and
/// `link` are theta-palindromes; `link` is nonempty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeficiencyWitness {
    pub head: Word,
    pub link: Word,
    pub repeats: usize,
    pub tail: Word,
}

impl DeficiencyWitness {
    /// Reassembles the witnessed word.
    pub fn recompose(&self) -> Word {
        let period = self.head.concat(&self.link);
        power(&period, self.repeats + 1)
            .concat(&self.head)
            .concat(&self.tail)
    }
}

/// Searches for a deficiency decomposition. Candidates are tried with the
/// smallest period `|head link|` first, then the smallest `|head|`, then
/// the largest repeat count, so the returned witness is canonical.
pub fn deficiency_witness(w: &Word, theta: &Involution) -> Result<Option<DeficiencyWitness>> {
    theta.check_word(w)?;
    let n = w.len();
    let letters = w.letters();
    for period in 1..=n {
        for head_len in 0..period {
            // head and link are prefixes of w at fixed offsets
            let head = w.prefix(head_len);
            let link = w.slice(head_len, period);
            if !is_theta_palindrome(&head, theta)? || !is_theta_palindrome(&link, theta)? {
                continue;
            }
            // largest repeat count that still fits, counting down
            let max_repeats = (n - head_len) / period;
            for repeats_plus_one in (1..=max_repeats).rev() {
                let prefix_len = repeats_plus_one * period + head_len;
                let periodic = (period..prefix_len).all(|i| letters[i] == letters[i - period]);
                if periodic {
                    return Ok(Some(DeficiencyWitness {
                        head,
                        link,
                        repeats: repeats_plus_one - 1,
                        tail: w.slice(prefix_len, n),
                    }));
                }
            }
        }
    }
    Ok(None)
}

/// Sizes `|C_theta(z^i)|` for `i = 1..=max_power`.
pub fn power_growth(z: &Word, theta: &Involution, max_power: usize) -> Result<Vec<usize>> {
    if z.is_empty() {
        return Err(Error::EmptyWord);
    }
    theta.check_word(z)?;
    (1..=max_power)
        .map(|i| Ok(theta_conjugates(&power(z, i), theta)?.elements.len()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::Alphabet;

    fn theta_abc() -> Involution {
        Involution::parse("ab,c", &Alphabet::parse("abc").unwrap()).unwrap()
    }

    fn theta_ab() -> Involution {
        Involution::parse("ab", &Alphabet::parse("ab").unwrap()).unwrap()
    }

    fn words(ws: &[&str]) -> Vec<Word> {
        ws.iter().map(|s| Word::from(*s)).collect()
    }

    #[test]
    fn conjugates_of_cabab() {
        let set = conjugates(&Word::from("cabab"));
        assert_eq!(
            set.elements,
            words(&["ababc", "abcab", "babca", "bcaba", "cabab"])
        );
    }

    #[test]
    fn conjugates_dedup_to_primitive_root_length() {
        assert_eq!(conjugates(&Word::from("aaa")).elements, words(&["aaa"]));
        assert_eq!(conjugates(&Word::from("abab")).elements, words(&["abab", "baba"]));
        assert_eq!(conjugates(&Word::empty()).elements, words(&[""]));
    }

    #[test]
    fn theta_conjugates_of_aac() {
        let set = theta_conjugates(&Word::from("aac"), &theta_abc()).unwrap();
        assert_eq!(set.elements, words(&["aac", "caa", "cba", "cbb"]));
        assert_eq!(set.entries.len(), 4);
        // split 0 contributes theta(w), split |w| contributes w
        assert_eq!(set.entries[0].value, Word::from("cbb"));
        assert_eq!(set.entries[3].value, Word::from("aac"));
    }

    #[test]
    fn theta_conjugates_of_abb_collapse() {
        let set = theta_conjugates(&Word::from("abb"), &theta_abc()).unwrap();
        assert_eq!(set.elements, words(&["aaa", "aab", "abb"]));
    }

    #[test]
    fn theta_conjugates_of_bccb() {
        let set = theta_conjugates(&Word::from("bccb"), &theta_abc()).unwrap();
        assert_eq!(set.elements, words(&["abcc", "acbc", "acca", "accb", "bccb"]));
        assert_eq!(set.elements.len(), 5);
    }

    #[test]
    fn theta_conjugates_of_aaa_under_swap() {
        let set = theta_conjugates(&Word::from("aaa"), &theta_ab()).unwrap();
        assert_eq!(set.elements, words(&["aaa", "baa", "bba", "bbb"]));
    }

    #[test]
    fn maximality_examples() {
        let theta = theta_abc();
        assert!(is_theta_maximal(&Word::from("aac"), &theta).unwrap());
        assert!(!is_theta_maximal(&Word::from("abcab"), &theta).unwrap());
        assert!(is_theta_maximal(&Word::empty(), &theta).unwrap());
    }

    #[test]
    fn deficiency_witness_of_abb() {
        let witness = deficiency_witness(&Word::from("abb"), &theta_abc())
            .unwrap()
            .expect("abb is not maximal");
        assert_eq!(witness.head, Word::empty());
        assert_eq!(witness.link, Word::from("ab"));
        assert_eq!(witness.repeats, 0);
        assert_eq!(witness.tail, Word::from("b"));
        assert_eq!(witness.recompose(), Word::from("abb"));
    }

    #[test]
    fn deficiency_witness_absent_for_maximal_words() {
        assert_eq!(deficiency_witness(&Word::from("aac"), &theta_abc()).unwrap(), None);
        assert_eq!(deficiency_witness(&Word::from("aaa"), &theta_ab()).unwrap(), None);
    }

    #[test]
    fn power_growth_examples() {
        let sizes = power_growth(&Word::from("ac"), &theta_abc(), 3).unwrap();
        assert_eq!(sizes, [3, 5, 7]);

        let unary = Alphabet::parse("a").unwrap();
        let id = Involution::identity(&unary);
        assert_eq!(power_growth(&Word::from("a"), &id, 3).unwrap(), [1, 1, 1]);

        assert_eq!(power_growth(&Word::from("a"), &theta_ab(), 2).unwrap(), [2, 3]);

        assert_eq!(
            power_growth(&Word::empty(), &theta_ab(), 2).unwrap_err(),
            Error::EmptyWord
        );
    }

    #[test]
    fn theta_conjugacy_is_not_symmetric() {
        // regression pin: aaa is a theta-conjugate of abb but not conversely
        let theta = theta_abc();
        let of_abb = theta_conjugates(&Word::from("abb"), &theta).unwrap();
        let of_aaa = theta_conjugates(&Word::from("aaa"), &theta).unwrap();
        assert!(of_abb.contains(&Word::from("aaa")));
        assert!(!of_aaa.contains(&Word::from("abb")));
    }
}
