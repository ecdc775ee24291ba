//! Executable statements of the structural theorems, each a pure
//! predicate over a single `(word, involution)` pair, plus the exhaustive
//! word enumerator that sweep drivers feed them with.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::conjugacy::{conjugates, deficiency_witness, is_theta_maximal, power_growth, theta_conjugates};
use crate::error::Result;
use crate::involution::Involution;
use crate::structure::{class_census, pal_pair_seed, palindrome_witness, theta_class_census, theta_pal_pair_witness, theta_palindrome_witness};
use crate::word::{Alphabet, Word};
use crate::word_ops::{is_palindrome, is_primitive, is_theta_palindrome, power, primitive_root};

/// Identifiers of the sweepable checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CheckId {
    T1,
    T2,
    T3,
    T4,
    T5,
    T6,
    T7,
    T8,
    T9,
}

impl CheckId {
    pub const ALL: [CheckId; 9] = [
        CheckId::T1,
        CheckId::T2,
        CheckId::T3,
        CheckId::T4,
        CheckId::T5,
        CheckId::T6,
        CheckId::T7,
        CheckId::T8,
        CheckId::T9,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckId::T1 => "T1",
            CheckId::T2 => "T2",
            CheckId::T3 => "T3",
            CheckId::T4 => "T4",
            CheckId::T5 => "T5",
            CheckId::T6 => "T6",
            CheckId::T7 => "T7",
            CheckId::T8 => "T8",
            CheckId::T9 => "T9",
        }
    }

    /// One-line statement of what the check verifies.
    pub fn summary(self) -> &'static str {
        match self {
            CheckId::T1 => "theta-conjugate set size is at most |w|+1",
            CheckId::T2 => "maximal size holds exactly when no deficiency decomposition exists",
            CheckId::T3 => "singleton theta-conjugate sets are exactly the fixed-letter powers",
            CheckId::T4 => "theta-conjugate counts of powers strictly grow (non-singleton base)",
            CheckId::T5 => "conjugacy class holds at most two theta-palindromes, two iff pair form",
            CheckId::T6 => "palindrome among theta-conjugates iff mirrored decomposition exists",
            CheckId::T7 => "theta-palindrome among theta-conjugates iff flanked decomposition exists",
            CheckId::T8 => "theta-palindromicity is shared by all powers of a word",
            CheckId::T9 => "u theta(u) with u not fixed has odd primitive exponent and paired root",
        }
    }

    pub fn parse(s: &str) -> Option<CheckId> {
        CheckId::ALL.iter().copied().find(|c| c.name().eq_ignore_ascii_case(s))
    }
}

impl core::fmt::Display for CheckId {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.name())
    }
}

/// Evidence of a violated check clause.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckFailure {
    /// Which clause broke.
    pub detail: String,
    /// The offending computed values.
    pub observed: String,
}

/// Result of one check on one `(word, involution)` pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckOutcome {
    Pass,
    /// The check's hypothesis does not apply to this word.
    Skipped,
    Fail(CheckFailure),
}

impl CheckOutcome {
    fn fail(detail: &str, observed: String) -> Self {
        CheckOutcome::Fail(CheckFailure {
            detail: String::from(detail),
            observed,
        })
    }
}

/// Runs one check. `max_power` bounds the exponents tried by T4 and T8.
pub fn run_check(
    id: CheckId,
    w: &Word,
    theta: &Involution,
    max_power: usize,
) -> Result<CheckOutcome> {
    match id {
        CheckId::T1 => cardinality_bound(w, theta),
        CheckId::T2 => maximality_equivalence(w, theta),
        CheckId::T3 => singleton_law(w, theta),
        CheckId::T4 => strict_growth(w, theta, max_power),
        CheckId::T5 => class_theta_palindrome_structure(w, theta),
        CheckId::T6 => palindrome_witness_law(w, theta),
        CheckId::T7 => theta_palindrome_witness_law(w, theta),
        CheckId::T8 => power_transfer(w, theta, max_power),
        CheckId::T9 => odd_exponent_law(w, theta),
    }
}

fn cardinality_bound(w: &Word, theta: &Involution) -> Result<CheckOutcome> {
    let size = theta_conjugates(w, theta)?.elements.len();
    if size > w.len() + 1 {
        return Ok(CheckOutcome::fail(
            "theta-conjugate set exceeds its maximum size",
            format!("|C_theta(w)| = {size} > {}", w.len() + 1),
        ));
    }
    Ok(CheckOutcome::Pass)
}

fn maximality_equivalence(w: &Word, theta: &Involution) -> Result<CheckOutcome> {
    let maximal = is_theta_maximal(w, theta)?;
    match deficiency_witness(w, theta)? {
        Some(witness) => {
            let sound = witness.recompose() == *w
                && !witness.link.is_empty()
                && is_theta_palindrome(&witness.head, theta)?
                && is_theta_palindrome(&witness.link, theta)?;
            if !sound {
                return Ok(CheckOutcome::fail(
                    "deficiency witness does not satisfy its own invariants",
                    format!("witness = {witness:?}"),
                ));
            }
            if maximal {
                return Ok(CheckOutcome::fail(
                    "deficiency decomposition found although the set is maximal",
                    format!("witness = {witness:?}"),
                ));
            }
        }
        None => {
            if !maximal {
                return Ok(CheckOutcome::fail(
                    "set is below maximum size but no deficiency decomposition exists",
                    format!(
                        "|C_theta(w)| = {}",
                        theta_conjugates(w, theta)?.elements.len()
                    ),
                ));
            }
        }
    }
    Ok(CheckOutcome::Pass)
}

fn singleton_law(w: &Word, theta: &Involution) -> Result<CheckOutcome> {
    let singleton = theta_conjugates(w, theta)?.elements.len() == 1;
    // the empty word is vacuously a fixed-letter power
    let fixed_letter_power = match w.letters().first() {
        None => true,
        Some(&a) => w.letters().iter().all(|&c| c == a) && theta.letter(a)? == a,
    };
    if singleton != fixed_letter_power {
        return Ok(CheckOutcome::fail(
            "singleton set and fixed-letter-power shape disagree",
            format!(
                "|C_theta(w)| = {}, fixed-letter power = {fixed_letter_power}",
                theta_conjugates(w, theta)?.elements.len()
            ),
        ));
    }
    Ok(CheckOutcome::Pass)
}

fn strict_growth(w: &Word, theta: &Involution, max_power: usize) -> Result<CheckOutcome> {
    if w.is_empty() || theta_conjugates(w, theta)?.elements.len() == 1 {
        return Ok(CheckOutcome::Skipped);
    }
    let sizes = power_growth(w, theta, max_power)?;
    if sizes.windows(2).any(|pair| pair[0] >= pair[1]) {
        return Ok(CheckOutcome::fail(
            "theta-conjugate counts of powers fail to strictly increase",
            format!("sizes = {sizes:?}"),
        ));
    }
    Ok(CheckOutcome::Pass)
}

fn class_theta_palindrome_structure(w: &Word, theta: &Involution) -> Result<CheckOutcome> {
    let census = class_census(w, theta)?;
    let pals = &census.theta_palindromes;
    if pals.len() > 2 {
        return Ok(CheckOutcome::fail(
            "conjugacy class holds more than two theta-palindromes",
            format!("theta-palindromes = {pals:?}"),
        ));
    }
    let witness = theta_pal_pair_witness(w, theta)?;
    if (pals.len() == 2) != witness.is_some() {
        return Ok(CheckOutcome::fail(
            "exactly-two census disagrees with the pair-form witness",
            format!("count = {}, witness = {witness:?}", pals.len()),
        ));
    }
    if let Some(witness) = &witness {
        let value = witness.recompose(theta)?;
        let member = conjugates(w).elements.binary_search(&value).is_ok();
        let block = witness.seed.concat(&theta.apply(&witness.seed)?);
        if !member || witness.exponent == 0 || !is_primitive(&block)? {
            return Ok(CheckOutcome::fail(
                "pair-form witness does not satisfy its own invariants",
                format!("witness = {witness:?}, value = {value:?}"),
            ));
        }
    }
    if pals.len() == 2 && pal_pair_seed(&pals[0], &pals[1], theta)?.is_none() {
        return Ok(CheckOutcome::fail(
            "theta-palindrome pair admits no primitive paired-seed factorization",
            format!("pair = {pals:?}"),
        ));
    }
    Ok(CheckOutcome::Pass)
}

fn palindrome_witness_law(w: &Word, theta: &Involution) -> Result<CheckOutcome> {
    let census = theta_class_census(w, theta)?;
    let witness = palindrome_witness(w, theta)?;
    if witness.is_some() != !census.palindromes.is_empty() {
        return Ok(CheckOutcome::fail(
            "mirrored decomposition disagrees with the palindrome census",
            format!(
                "palindromes = {:?}, witness = {witness:?}",
                census.palindromes
            ),
        ));
    }
    if let Some(witness) = &witness {
        if witness.recompose(theta)? != *w || !is_palindrome(&witness.palindrome) {
            return Ok(CheckOutcome::fail(
                "palindrome witness does not satisfy its own invariants",
                format!("witness = {witness:?}"),
            ));
        }
    }
    if is_palindrome(w) {
        let count = census.palindromes.len();
        if count > 2 {
            return Ok(CheckOutcome::fail(
                "palindromic source yields more than two palindromic theta-conjugates",
                format!("palindromes = {:?}", census.palindromes),
            ));
        }
        if !is_theta_palindrome(w, theta)? && count != 2 {
            return Ok(CheckOutcome::fail(
                "palindromic non-theta-palindromic source must yield exactly two palindromes",
                format!("palindromes = {:?}", census.palindromes),
            ));
        }
    }
    Ok(CheckOutcome::Pass)
}

fn theta_palindrome_witness_law(w: &Word, theta: &Involution) -> Result<CheckOutcome> {
    let census = theta_class_census(w, theta)?;
    let witness = theta_palindrome_witness(w, theta)?;
    if witness.is_some() != !census.theta_palindromes.is_empty() {
        return Ok(CheckOutcome::fail(
            "flanked decomposition disagrees with the theta-palindrome census",
            format!(
                "theta-palindromes = {:?}, witness = {witness:?}",
                census.theta_palindromes
            ),
        ));
    }
    if let Some(witness) = &witness {
        if witness.recompose() != *w || !is_theta_palindrome(&witness.core, theta)? {
            return Ok(CheckOutcome::fail(
                "theta-palindrome witness does not satisfy its own invariants",
                format!("witness = {witness:?}"),
            ));
        }
    }
    if is_theta_palindrome(w, theta)? && census.theta_palindromes != [w.clone()] {
        return Ok(CheckOutcome::fail(
            "theta-palindromic source must be its set's only theta-palindrome",
            format!("theta-palindromes = {:?}", census.theta_palindromes),
        ));
    }
    Ok(CheckOutcome::Pass)
}

fn power_transfer(w: &Word, theta: &Involution, max_power: usize) -> Result<CheckOutcome> {
    let mut flags = Vec::with_capacity(max_power);
    for exponent in 1..=max_power {
        flags.push(is_theta_palindrome(&power(w, exponent), theta)?);
    }
    if flags.windows(2).any(|pair| pair[0] != pair[1]) {
        return Ok(CheckOutcome::fail(
            "theta-palindromicity differs between powers of the same word",
            format!("flags by exponent = {flags:?}"),
        ));
    }
    Ok(CheckOutcome::Pass)
}

fn odd_exponent_law(w: &Word, theta: &Involution) -> Result<CheckOutcome> {
    theta.check_word(w)?;
    if w.is_empty() || w.len() % 2 != 0 {
        return Ok(CheckOutcome::Skipped);
    }
    let half = w.prefix(w.len() / 2);
    let image = theta.apply(&half)?;
    if w.suffix(w.len() / 2) != image || half == image {
        return Ok(CheckOutcome::Skipped);
    }
    let root = primitive_root(w)?;
    if root.exponent % 2 == 0 {
        return Ok(CheckOutcome::fail(
            "u theta(u) with u not fixed by theta has an even primitive exponent",
            format!("root = {:?}, exponent = {}", root.root, root.exponent),
        ));
    }
    let seed = root.root.prefix(root.root.len() / 2);
    if root.root.len() % 2 != 0 || seed.concat(&theta.apply(&seed)?) != root.root {
        return Ok(CheckOutcome::fail(
            "primitive root of u theta(u) is not itself of paired form",
            format!("root = {:?}", root.root),
        ));
    }
    Ok(CheckOutcome::Pass)
}

/// Iterator over all words of length `0..=max_len`, shortest first, then
/// lexicographic in the alphabet's declared letter order.
pub fn enumerate_words(alphabet: &Alphabet, max_len: usize) -> Words {
    Words {
        letters: alphabet.letters().to_vec(),
        max_len,
        next: Some(Vec::new()),
    }
}

pub struct Words {
    letters: Vec<char>,
    max_len: usize,
    // letter indices of the next word to yield; None once exhausted
    next: Option<Vec<usize>>,
}

impl Iterator for Words {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        let mut digits = self.next.take()?;
        let word = Word::new(digits.iter().map(|&i| self.letters[i]));
        let mut pos = digits.len();
        while pos > 0 && digits[pos - 1] == self.letters.len() - 1 {
            digits[pos - 1] = 0;
            pos -= 1;
        }
        if pos > 0 {
            digits[pos - 1] += 1;
            self.next = Some(digits);
        } else if digits.len() < self.max_len {
            self.next = Some(alloc::vec![0; digits.len() + 1]);
        }
        Some(word)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn collect(alphabet: &str, max_len: usize) -> Vec<Word> {
        enumerate_words(&Alphabet::parse(alphabet).unwrap(), max_len).collect()
    }

    #[test]
    fn enumeration_over_unary_alphabet() {
        assert_eq!(
            collect("a", 2),
            [Word::empty(), Word::from("a"), Word::from("aa")]
        );
    }

    #[test]
    fn enumeration_over_binary_alphabet() {
        assert_eq!(
            collect("ab", 1),
            [Word::empty(), Word::from("a"), Word::from("b")]
        );
        assert_eq!(
            collect("ab", 2),
            ["", "a", "b", "aa", "ab", "ba", "bb"]
                .iter()
                .map(|s| Word::from(*s))
                .collect::<Vec<_>>()
        );
    }

    #[test]
    fn enumeration_count_matches_geometric_series() {
        assert_eq!(collect("abc", 10).len(), 88_573);
    }

    #[test]
    fn enumeration_respects_declared_letter_order() {
        assert_eq!(
            collect("ba", 1),
            [Word::empty(), Word::from("b"), Word::from("a")]
        );
    }

    #[test]
    fn check_ids_round_trip_and_know_their_names() {
        for id in CheckId::ALL {
            assert_eq!(CheckId::parse(id.name()), Some(id));
            assert!(!id.summary().is_empty());
        }
        assert_eq!(CheckId::parse("t3"), Some(CheckId::T3));
        assert_eq!(CheckId::parse("T10"), None);
    }

    #[test]
    fn checks_pass_on_the_worked_examples() {
        let sigma = Alphabet::parse("abc").unwrap();
        let theta = Involution::parse("ab,c", &sigma).unwrap();
        for word in ["", "aac", "abb", "bccb", "aba", "ab", "abcab", "aaa", "cabab", "abab"] {
            let w = Word::from(word);
            for id in CheckId::ALL {
                let outcome = run_check(id, &w, &theta, 3).unwrap();
                assert!(
                    !matches!(outcome, CheckOutcome::Fail(_)),
                    "{id} failed on {word:?}: {outcome:?}"
                );
            }
        }
    }

    #[test]
    fn strict_growth_skips_singletons() {
        let sigma = Alphabet::parse("a").unwrap();
        let id = Involution::identity(&sigma);
        assert_eq!(
            run_check(CheckId::T4, &Word::from("aa"), &id, 3).unwrap(),
            CheckOutcome::Skipped
        );
    }

    #[test]
    fn odd_exponent_law_applies_only_to_paired_words() {
        let sigma = Alphabet::parse("ab").unwrap();
        let theta = Involution::parse("ab", &sigma).unwrap();
        // ab = a theta(a) with a != theta(a): applicable, exponent 1 is odd
        assert_eq!(
            run_check(CheckId::T9, &Word::from("ab"), &theta, 3).unwrap(),
            CheckOutcome::Pass
        );
        // aa is not of the form u theta(u) under the swap
        assert_eq!(
            run_check(CheckId::T9, &Word::from("aa"), &theta, 3).unwrap(),
            CheckOutcome::Skipped
        );
        assert_eq!(
            run_check(CheckId::T9, &Word::from("aba"), &theta, 3).unwrap(),
            CheckOutcome::Skipped
        );
    }
}
