//! Non-cross patterns `x1^n1 x2^n2 … xk^nk`.

use num_bigint::BigUint;

use super::validate;
use crate::alphabet::{Alphabet, Letter};
use crate::class::noncross_exponents;
use crate::error::{pre, Result};
use crate::matcher::{staircase_word, unary_membership};
use crate::numtheory::{e_value, factorial, prime_power_factors, PrimePowerFactor};
use crate::pattern::Pattern;
use crate::sample::Sample;
use crate::word::Word;

fn exponents(p: &Pattern) -> Result<Vec<u32>> {
    noncross_exponents(p).ok_or_else(|| pre("pattern is not non-cross"))
}

/// All labelled powers `0^j`, `0 ≤ j ≤ m`, for a unary non-cross pattern
/// with exponents at most `m`.
pub fn noncross_unary_set(p: &Pattern, m: usize) -> Result<Sample> {
    let exps = exponents(p)?;
    if exps.iter().any(|&e| e as usize > m) {
        return Err(pre(format!("an exponent exceeds m = {m}")));
    }
    Sample::from_examples((0..=m).map(|j| (Word::run(Letter(0), j), unary_membership(&BigUint::from(j), p))))
}

/// `0` if some exponent is 1 (the pattern is then equivalent to `x1`),
/// otherwise the staircase `(01)^n1 (001)^n2 … (0^k 1)^nk`.
pub fn noncross_pbt_witness(p: &Pattern) -> Result<Word> {
    let exps = exponents(p)?;
    if exps.contains(&1) {
        return Ok(Word::letter(Letter(0)));
    }
    Ok(staircase_word(&exps.iter().map(|&e| BigUint::from(e)).collect::<Vec<_>>()))
}

/// A negative example aimed at one prime-power factor of the exponents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TWord {
    pub factor: PrimePowerFactor,
    /// Block count.
    pub e: BigUint,
    /// Number of exponents not divisible by `q^r`; the word has `d + 1` blocks.
    pub d: usize,
    pub word: Word,
    /// The exponents with the first one of valuation `r` divided by `q`:
    /// the pattern this word rules out.
    pub rival: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NoncrossTeachingSet {
    /// Positive staircase with counts `n1 … nk`.
    pub v1: Word,
    /// Negative staircase with `k + 1` blocks of `m!`.
    pub v2: Word,
    pub t_words: Vec<TWord>,
}

impl NoncrossTeachingSet {
    pub fn sample(&self) -> Sample {
        let mut s = Sample::new();
        let mut add = |w: &Word, l| s.insert(w.clone(), l).expect("labels are consistent");
        add(&self.v1, true);
        add(&self.v2, false);
        for t in &self.t_words {
            add(&t.word, false);
        }
        s
    }
}

/// Teaching set for `p` among non-cross patterns with exponents at most
/// `m`: the positive staircase `v1`, the negative `v2` ruling out patterns
/// with more variables, and one negative `t`-word per prime-power factor
/// `q^r` (with `r` the exact `q`-valuation of some exponent) ruling out
/// patterns whose exponents are "coarser" at `q`.
pub fn noncross_td_set(p: &Pattern, m: usize) -> Result<NoncrossTeachingSet> {
    let exps = exponents(p)?;
    if exps.contains(&1) {
        return Err(pre("an exponent equals 1; the pattern is taught by the witness 0"));
    }
    if exps.iter().any(|&e| e as usize > m) {
        return Err(pre(format!("an exponent exceeds m = {m}")));
    }
    let alpha = Alphabet::binary();
    let v1 = noncross_pbt_witness(p)?;
    let mf = factorial(m as u64);
    let v2 = staircase_word(&vec![mf; exps.len() + 1]);
    let as_u64: Vec<u64> = exps.iter().map(|&e| e as u64).collect();
    let mut t_words = Vec::new();
    for f in prime_power_factors(&as_u64) {
        let qr = f.q.pow(f.r);
        let d = as_u64.iter().filter(|&&n| n % qr != 0).count();
        let e = e_value(&f, m as u64);
        let word = staircase_word(&vec![e.clone(); d + 1]);
        let mut rival = exps.clone();
        if let Some(i) = as_u64.iter().position(|&n| crate::numtheory::valuation(n, f.q) == f.r) {
            rival[i] /= f.q as u32;
        }
        t_words.push(TWord { factor: f, e, d, word, rival });
    }
    let set = NoncrossTeachingSet { v1, v2, t_words };
    validate(p, &set.sample(), &alpha)?;
    Ok(set)
}
