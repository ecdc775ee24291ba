//! Palindrome and theta-palindrome distribution inside conjugacy classes
//! and theta-conjugate sets, with constructive witnesses.
//!
//! Each witness finder is a plain decomposition search with a fixed,
//! deterministic candidate order. None of them consults the censuses, so
//! the count/witness equivalences stated by the characterization theorems
//! can be cross-checked between independent code paths.

use alloc::vec::Vec;

use crate::conjugacy::{conjugates, theta_conjugates};
use crate::error::Result;
use crate::involution::Involution;
use crate::word::Word;
use crate::word_ops::{is_palindrome, is_primitive, is_theta_palindrome, power, reverse};

/// Classification of a word set by palindromicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PalCensus {
    /// Size of the inspected set.
    pub total: usize,
    /// Elements equal to their reversal, in input order.
    pub palindromes: Vec<Word>,
    /// Elements fixed by theta, in input order.
    pub theta_palindromes: Vec<Word>,
}

/// Classifies every element of an already-deduplicated, ordered set.
pub fn census(elements: &[Word], theta: &Involution) -> Result<PalCensus> {
    let mut palindromes = Vec::new();
    let mut theta_palindromes = Vec::new();
    for w in elements {
        if is_palindrome(w) {
            palindromes.push(w.clone());
        }
        if is_theta_palindrome(w, theta)? {
            theta_palindromes.push(w.clone());
        }
    }
    Ok(PalCensus {
        total: elements.len(),
        palindromes,
        theta_palindromes,
    })
}

/// Census of the conjugacy class `C(w)`.
pub fn class_census(w: &Word, theta: &Involution) -> Result<PalCensus> {
    census(&conjugates(w).elements, theta)
}

/// Census of the theta-conjugate set `C_theta(w)`.
pub fn theta_class_census(w: &Word, theta: &Involution) -> Result<PalCensus> {
    census(&theta_conjugates(w, theta)?.elements, theta)
}

/// Certifies that `C(w)` holds two theta-palindromes: some conjugate of
/// `w` equals `(seed theta(seed))^exponent` with the block primitive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaPalPairWitness {
    pub seed: Word,
    pub exponent: usize,
}

impl ThetaPalPairWitness {
    /// The certified conjugate `(seed theta(seed))^exponent`.
    pub fn recompose(&self, theta: &Involution) -> Result<Word> {
        let block = self.seed.concat(&theta.apply(&self.seed)?);
        Ok(power(&block, self.exponent))
    }
}

/// Searches the conjugacy class for an element `(x theta(x))^l` with the
/// block primitive; smallest `|x|` first, then lexicographic `x`.
pub fn theta_pal_pair_witness(
    w: &Word,
    theta: &Involution,
) -> Result<Option<ThetaPalPairWitness>> {
    theta.check_word(w)?;
    let n = w.len();
    let class = conjugates(w);
    for seed_len in 1..=n / 2 {
        if n % (2 * seed_len) != 0 {
            continue;
        }
        let exponent = n / (2 * seed_len);
        // class elements are sorted, so their prefixes come out in order
        for candidate in &class.elements {
            let seed = candidate.prefix(seed_len);
            let block = seed.concat(&theta.apply(&seed)?);
            if power(&block, exponent) == *candidate && is_primitive(&block)? {
                return Ok(Some(ThetaPalPairWitness { seed, exponent }));
            }
        }
    }
    Ok(None)
}

/// Which side of a palindrome witness carries the palindromic part.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PalWitnessForm {
    /// `w = palindrome . theta(mirror^R) . mirror`
    Prefix,
    /// `w = mirror . palindrome . theta(mirror^R)`
    Suffix,
}

/// Decomposition certifying at least one palindrome among the
/// theta-conjugates of a word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PalindromeWitness {
    pub form: PalWitnessForm,
    pub palindrome: Word,
    pub mirror: Word,
}

impl PalindromeWitness {
    pub fn recompose(&self, theta: &Involution) -> Result<Word> {
        let mirrored = theta.apply(&reverse(&self.mirror))?;
        Ok(match self.form {
            PalWitnessForm::Prefix => self.palindrome.concat(&mirrored).concat(&self.mirror),
            PalWitnessForm::Suffix => self.mirror.concat(&self.palindrome).concat(&mirrored),
        })
    }
}

/// Searches for a palindrome-producing decomposition: prefix form before
/// suffix form, smallest mirror first.
pub fn palindrome_witness(w: &Word, theta: &Involution) -> Result<Option<PalindromeWitness>> {
    theta.check_word(w)?;
    let n = w.len();
    for m in 0..=n / 2 {
        let mirror = w.suffix(m);
        let mirrored = theta.apply(&reverse(&mirror))?;
        let palindrome = w.prefix(n - 2 * m);
        if w.slice(n - 2 * m, n - m) == mirrored && is_palindrome(&palindrome) {
            return Ok(Some(PalindromeWitness {
                form: PalWitnessForm::Prefix,
                palindrome,
                mirror,
            }));
        }
    }
    for m in 0..=n / 2 {
        let mirror = w.prefix(m);
        let mirrored = theta.apply(&reverse(&mirror))?;
        let palindrome = w.slice(m, n - m);
        if w.suffix(m) == mirrored && is_palindrome(&palindrome) {
            return Ok(Some(PalindromeWitness {
                form: PalWitnessForm::Suffix,
                palindrome,
                mirror,
            }));
        }
    }
    Ok(None)
}

/// Shape of a theta-palindrome witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ThetaPalWitnessForm {
    /// `w = flank . core . flank`
    Uxu,
    /// `w = core . flank . flank`
    Xuu,
}

/// Decomposition certifying at least one theta-palindrome among the
/// theta-conjugates of a word. `core` is a theta-palindrome.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaPalindromeWitness {
    pub form: ThetaPalWitnessForm,
    pub core: Word,
    pub flank: Word,
}

impl ThetaPalindromeWitness {
    pub fn recompose(&self) -> Word {
        match self.form {
            ThetaPalWitnessForm::Uxu => self.flank.concat(&self.core).concat(&self.flank),
            ThetaPalWitnessForm::Xuu => self.core.concat(&self.flank).concat(&self.flank),
        }
    }
}

/// Searches for a theta-palindrome-producing decomposition: flanked form
/// before doubled form, smallest flank first.
pub fn theta_palindrome_witness(
    w: &Word,
    theta: &Involution,
) -> Result<Option<ThetaPalindromeWitness>> {
    theta.check_word(w)?;
    let n = w.len();
    for m in 0..=n / 2 {
        let flank = w.prefix(m);
        let core = w.slice(m, n - m);
        if w.suffix(m) == flank && is_theta_palindrome(&core, theta)? {
            return Ok(Some(ThetaPalindromeWitness {
                form: ThetaPalWitnessForm::Uxu,
                core,
                flank,
            }));
        }
    }
    for m in 0..=n / 2 {
        let flank = w.suffix(m);
        let core = w.prefix(n - 2 * m);
        if w.slice(n - 2 * m, n - m) == flank && is_theta_palindrome(&core, theta)? {
            return Ok(Some(ThetaPalindromeWitness {
                form: ThetaPalWitnessForm::Xuu,
                core,
                flank,
            }));
        }
    }
    Ok(None)
}

/// For two distinct theta-palindromic conjugates `p` and `q`, finds the
/// seed `x` and exponent `i` with `p = (x theta(x))^i`, `q = (theta(x) x)^i`
/// and the block primitive.
pub fn pal_pair_seed(p: &Word, q: &Word, theta: &Involution) -> Result<Option<(Word, usize)>> {
    let n = p.len();
    for seed_len in 1..=n / 2 {
        if n % (2 * seed_len) != 0 {
            continue;
        }
        let exponent = n / (2 * seed_len);
        let seed = p.prefix(seed_len);
        let image = theta.apply(&seed)?;
        let forward = seed.concat(&image);
        let backward = image.concat(&seed);
        if power(&forward, exponent) == *p
            && power(&backward, exponent) == *q
            && is_primitive(&forward)?
        {
            return Ok(Some((seed, exponent)));
        }
    }
    Ok(None)
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
    fn census_of_theta_conjugates_of_aaa() {
        let c = theta_class_census(&Word::from("aaa"), &theta_ab()).unwrap();
        assert_eq!(c.total, 4);
        assert_eq!(c.palindromes, words(&["aaa", "bbb"]));
        assert!(c.theta_palindromes.is_empty());
    }

    #[test]
    fn census_of_theta_conjugates_of_abab() {
        let c = theta_class_census(&Word::from("abab"), &theta_ab()).unwrap();
        assert_eq!(c.total, 3);
        assert_eq!(c.theta_palindromes, words(&["abab"]));
    }

    #[test]
    fn census_of_empty_set() {
        let c = census(&[], &theta_ab()).unwrap();
        assert_eq!((c.total, c.palindromes.len(), c.theta_palindromes.len()), (0, 0, 0));
    }

    #[test]
    fn class_census_examples() {
        let theta = theta_abc();
        let c = class_census(&Word::from("aaa"), &theta).unwrap();
        assert!(c.theta_palindromes.is_empty());

        let c = class_census(&Word::from("cabab"), &theta).unwrap();
        assert_eq!(c.theta_palindromes, words(&["abcab"]));

        let c = class_census(&Word::from("abab"), &theta).unwrap();
        assert_eq!(c.theta_palindromes, words(&["abab", "baba"]));
    }

    #[test]
    fn pair_witness_examples() {
        let theta = theta_abc();
        let witness = theta_pal_pair_witness(&Word::from("abab"), &theta)
            .unwrap()
            .expect("abab has two theta-palindromic conjugates");
        assert_eq!(witness.seed, Word::from("a"));
        assert_eq!(witness.exponent, 2);
        assert_eq!(witness.recompose(&theta).unwrap(), Word::from("abab"));

        assert_eq!(theta_pal_pair_witness(&Word::from("cabab"), &theta).unwrap(), None);
        assert_eq!(theta_pal_pair_witness(&Word::from("aaa"), &theta).unwrap(), None);
    }

    #[test]
    fn palindrome_counts_in_theta_conjugates() {
        let theta = theta_abc();
        let c = theta_class_census(&Word::from("aac"), &theta).unwrap();
        assert!(c.palindromes.is_empty());

        let c = theta_class_census(&Word::from("abb"), &theta).unwrap();
        assert_eq!(c.palindromes, words(&["aaa"]));

        let c = theta_class_census(&Word::from("aaa"), &theta_ab()).unwrap();
        assert_eq!(c.palindromes, words(&["aaa", "bbb"]));
    }

    #[test]
    fn palindrome_witness_examples() {
        let theta = theta_abc();
        let witness = palindrome_witness(&Word::from("abb"), &theta)
            .unwrap()
            .expect("C_theta(abb) holds the palindrome aaa");
        assert_eq!(witness.recompose(&theta).unwrap(), Word::from("abb"));
        assert!(is_palindrome(&witness.palindrome));

        assert_eq!(palindrome_witness(&Word::from("aac"), &theta).unwrap(), None);

        // identity involution: any palindrome witnesses itself
        let id = Involution::identity(&Alphabet::parse("abc").unwrap());
        let witness = palindrome_witness(&Word::from("bccb"), &id).unwrap().unwrap();
        assert_eq!(witness.form, PalWitnessForm::Prefix);
        assert_eq!(witness.palindrome, Word::from("bccb"));
        assert_eq!(witness.mirror, Word::empty());
    }

    #[test]
    fn theta_palindrome_witness_examples() {
        let theta = theta_ab();
        // abab is itself a theta-palindrome, so the empty flank wins
        let witness = theta_palindrome_witness(&Word::from("abab"), &theta)
            .unwrap()
            .expect("C_theta(abab) holds abab");
        assert_eq!(witness.form, ThetaPalWitnessForm::Uxu);
        assert_eq!(witness.flank, Word::empty());
        assert_eq!(witness.core, Word::from("abab"));
        assert_eq!(witness.recompose(), Word::from("abab"));

        assert_eq!(theta_palindrome_witness(&Word::from("aaa"), &theta).unwrap(), None);

        // split flank: w = u x u with x = theta-palindromic middle
        let witness = theta_palindrome_witness(&Word::from("aaba"), &theta)
            .unwrap()
            .expect("baba is a theta-palindrome in C_theta(aaba)");
        assert_eq!(witness.recompose(), Word::from("aaba"));
    }

    #[test]
    fn theta_conjugates_of_cc_keep_their_theta_palindrome() {
        let c = theta_class_census(&Word::from("cc"), &theta_abc()).unwrap();
        assert_eq!(c.total, 1);
        assert_eq!(c.theta_palindromes, words(&["cc"]));
    }

    #[test]
    fn pair_seed_reconstructs_both_theta_palindromes() {
        let theta = theta_abc();
        let (seed, exponent) = pal_pair_seed(&Word::from("abab"), &Word::from("baba"), &theta)
            .unwrap()
            .expect("abab/baba split as (a theta(a))^2 / (theta(a) a)^2");
        assert_eq!(seed, Word::from("a"));
        assert_eq!(exponent, 2);
    }
}
