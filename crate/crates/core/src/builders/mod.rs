//! Teaching-set and witness-word constructions, one function per class.
//!
//! Every constructor checks its output against the membership oracle before
//! returning it and fails with [`Error::Construction`](crate::Error) if a
//! positive example falls outside the target language or a negative inside.

mod infinite;
mod noncross;
mod passepartout;
mod qr;
mod sr;
mod ternary;

pub use infinite::{infinite_pbt_set, unary_mregular_set};
pub use noncross::{noncross_pbt_witness, noncross_td_set, noncross_unary_set, NoncrossTeachingSet, TWord};
pub use passepartout::{fixed_x222_set, passe_partout, x222, PassePartout};
pub use qr::{qr_pbt_witness, qr_unary_pbt_set, qr_unary_set, ColouredAdjacency};
pub use sr::{hat_word, sr_pbt_set, sr_td_set, sr_vs_all_set, sr_vs_regular_set, sr_zero_chain_set};

use crate::alphabet::{Alphabet, Letter};
use crate::error::{Error, Result};
use crate::matcher::membership;
use crate::pattern::Pattern;
use crate::sample::Sample;
use crate::word::Word;

/// Checks that `sample` agrees with `p`.
pub(crate) fn validate(p: &Pattern, sample: &Sample, alpha: &Alphabet) -> Result<()> {
    for (w, label) in sample.iter() {
        if membership(w, p, alpha)? != *label {
            return Err(Error::Construction(format!(
                "{} example {} disagrees with {}",
                if *label { "positive" } else { "negative" },
                w.render(alpha),
                p.render(alpha)
            )));
        }
    }
    Ok(())
}

pub(crate) fn sample_of(examples: Vec<(Vec<Letter>, bool)>) -> Result<Sample> {
    Sample::from_examples(examples.into_iter().map(|(w, l)| (Word::from_letters(&w), l)))
}

pub(crate) fn unary_word(n: usize) -> Word {
    Word::run(Letter(0), n)
}
