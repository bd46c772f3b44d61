//! Staircase words `(01)^{i1}(001)^{i2}…(0^ℓ1)^{iℓ}` and membership in
//! non-cross languages on them, without expanding the word.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::alphabet::Letter;
use crate::numtheory::coin_representable;
use crate::word::{Factor, Word};

/// Block counts of a staircase word; block `j` (0-based) is `(0^{j+1} 1)^{counts[j]}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StaircaseForm {
    pub counts: Vec<BigUint>,
}

impl StaircaseForm {
    pub fn widths(&self) -> Vec<usize> {
        (1..=self.counts.len()).collect()
    }

    pub fn to_word(&self) -> Word {
        staircase_word(&self.counts)
    }
}

/// `(01)^{c1}(001)^{c2}…`; zero counts are skipped.
pub fn staircase_word(counts: &[BigUint]) -> Word {
    let mut w = Word::empty();
    for (j, c) in counts.iter().enumerate() {
        let base = Word::from_runs([(Letter(0), BigUint::from(j + 1)), (Letter(1), BigUint::one())]);
        w.append(&base.pow(c).expect("two-run base"));
    }
    w
}

/// Merges `(width, count)` blocks as they are produced.
#[derive(Default)]
struct Blocks {
    out: Vec<(BigUint, BigUint)>,
}

impl Blocks {
    fn push(&mut self, width: BigUint, count: BigUint) {
        if count.is_zero() {
            return;
        }
        match self.out.last_mut() {
            Some((w, c)) if *w == width => *c += count,
            _ => self.out.push((width, count)),
        }
    }
}

/// Reads one copy of `runs` starting with `pending` zeros; returns the blocks
/// produced and the trailing zeros, or `None` on a shape violation.
fn scan(runs: &[(Letter, BigUint)], mut pending: BigUint) -> Option<(Vec<BigUint>, BigUint)> {
    let mut widths = Vec::new();
    for (l, e) in runs {
        match l.0 {
            0 => pending += e,
            1 => {
                if !e.is_one() || pending.is_zero() {
                    return None;
                }
                widths.push(std::mem::take(&mut pending));
            }
            _ => return None,
        }
    }
    Some((widths, pending))
}

/// Decomposes a word over letters `0`, `1` into staircase blocks with widths
/// exactly `1, 2, …, ℓ`. Powers are handled in closed form.
pub fn staircase_decompose(w: &Word) -> Option<StaircaseForm> {
    let mut blocks = Blocks::default();
    let mut pending = BigUint::zero();
    for f in w.factors() {
        match f {
            Factor::Run(l, e) => {
                let (ws, p) = scan(&[(*l, e.clone())], pending)?;
                for x in ws {
                    blocks.push(x, BigUint::one());
                }
                pending = p;
            }
            Factor::Power(runs, t) => {
                let (first, p1) = scan(runs, pending)?;
                for x in first {
                    blocks.push(x, BigUint::one());
                }
                // Every later copy starts with the same trailing zeros.
                let (rest, p2) = scan(runs, p1.clone())?;
                let reps = t - 1u32;
                if rest.len() == 1 {
                    blocks.push(rest[0].clone(), reps);
                } else if reps.is_one() {
                    for x in rest {
                        blocks.push(x, BigUint::one());
                    }
                } else if !rest.is_empty() {
                    // Repeating two or more widths cannot be increasing.
                    return None;
                }
                pending = p2;
            }
        }
    }
    if !pending.is_zero() {
        return None;
    }
    let mut counts = Vec::with_capacity(blocks.out.len());
    for (j, (width, count)) in blocks.out.into_iter().enumerate() {
        if width.to_usize() != Some(j + 1) {
            return None;
        }
        counts.push(count);
    }
    Some(StaircaseForm { counts })
}

/// Membership of a staircase word in `L(x1^{n1} … xk^{nk})`.
///
/// If some exponent is 1 the language is everything. Otherwise every block
/// count must be a non-negative combination of the exponents of a
/// contiguous run of variables, runs taken left to right; taking each run
/// as short as possible is optimal because representability only grows
/// with more coins.
pub fn noncross_staircase_membership(s: &StaircaseForm, exps: &[u32]) -> bool {
    if exps.contains(&1) {
        return true;
    }
    let exps: Vec<u64> = exps.iter().map(|&e| e as u64).collect();
    let mut l = 0;
    for count in &s.counts {
        let mut b = l;
        loop {
            if b == exps.len() {
                return false;
            }
            if coin_representable(count, &exps[l..=b]) {
                break;
            }
            b += 1;
        }
        l = b + 1;
    }
    true
}
