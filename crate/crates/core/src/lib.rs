//! Erasing pattern languages: exact membership, teaching-set constructions
//! for the classes where they are known, and a bounded brute-force oracle
//! that verifies teaching sets and computes teaching dimensions on small
//! instances.
//!
//! ```
//! use pattern_teach::{membership, parse_pattern, parse_word, Alphabet};
//!
//! let a = Alphabet::binary();
//! let p = parse_pattern("x1 0 x2 0 x3 1 x4 1 x5", &a).unwrap();
//! assert!(membership(&parse_word("00011", &a).unwrap(), &p, &a).unwrap());
//! assert!(!membership(&parse_word("01101", &a).unwrap(), &p, &a).unwrap());
//! ```

pub mod alphabet;
pub mod builders;
pub mod class;
pub mod error;
pub mod matcher;
pub mod numtheory;
pub mod pattern;
pub mod sample;
pub mod verifier;
pub mod word;

pub use alphabet::{Alphabet, Letter};
pub use class::{
    binary_regular_normalize, classify, noncross_exponents, sbr_canonicalize, ClassSpec, Classification, Family,
};
pub use error::{Error, Result};
pub use matcher::{
    match_witness, membership, noncross_staircase_membership, pattern_morphism, shuffle_member, staircase_decompose,
    unary_membership, StaircaseForm, Witness,
};
pub use pattern::{parse_pattern, Pattern, Sym};
pub use sample::{parse_sample, Example, Sample};
pub use word::{parse_word, subsequence, Word};
