//! Combinatorics on words under antimorphic involutions.
//!
//! An antimorphic involution `theta` maps a word to the letter-wise image
//! of its reversal and satisfies `theta(theta(w)) = w`; the DNA
//! Watson-Crick complement is the motivating instance. This crate builds
//! theta-conjugate sets, counts palindromes and theta-palindromes inside
//! conjugacy classes and theta-conjugate sets, produces constructive
//! decomposition witnesses for the structural characterizations, and
//! packages each theorem as an executable check suitable for exhaustive
//! verification over small alphabets.
//!
//! The crate is `no_std` (with `alloc`); IO, report formats, and the
//! command-line front end live in the companion `wkwords-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod checks;
pub mod conjugacy;
pub mod error;
pub mod involution;
pub mod structure;
pub mod word;
pub mod word_ops;

pub use checks::{enumerate_words, run_check, CheckFailure, CheckId, CheckOutcome};
pub use conjugacy::{
    conjugates, deficiency_witness, is_theta_maximal, power_growth, theta_conjugates,
    ConjugateSet, DeficiencyWitness, ThetaConjugateEntry, ThetaConjugateSet,
};
pub use error::{Error, Result};
pub use involution::{enumerate_involutions, Involution};
pub use structure::{
    census, class_census, pal_pair_seed, palindrome_witness, theta_class_census,
    theta_pal_pair_witness, theta_palindrome_witness, PalCensus, PalWitnessForm,
    PalindromeWitness, ThetaPalPairWitness, ThetaPalWitnessForm, ThetaPalindromeWitness,
};
pub use word::{Alphabet, Word};
pub use word_ops::{
    is_palindrome, is_primitive, is_theta_palindrome, power, primitive_root, reverse,
    PrimitiveRoot,
};
