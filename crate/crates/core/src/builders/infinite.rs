//! All patterns over an unbounded alphabet, and `m`-regular patterns over
//! one letter.

use std::collections::HashMap;

use num_bigint::BigUint;

use super::{unary_word, validate};
use crate::alphabet::{Alphabet, Letter};
use crate::error::{pre, Result};
use crate::matcher::unary_membership;
use crate::pattern::{Pattern, Sym};
use crate::sample::Sample;
use crate::word::Word;

/// `(π(ε), +)` and `(π with its variables replaced by distinct fresh
/// letters, +)`, for the preference that favours longer skeletons and then
/// smaller languages.
pub fn infinite_pbt_set(p: &Pattern, alpha: &Alphabet) -> Result<Sample> {
    if alpha.is_finite() {
        return Err(pre("needs an unbounded alphabet"));
    }
    let used = p.const_set();
    let mut fresh = (0..).map(|i| alpha.fresh(i)).filter(|l| !used.contains(l));
    let images: HashMap<u32, Word> =
        p.vars().into_iter().map(|v| (v, Word::letter(fresh.next().expect("infinite")))).collect();
    let mut s = Sample::new();
    s.pos(p.skeleton())?;
    s.pos(p.substitute(&images))?;
    validate(p, &s, alpha)?;
    Ok(s)
}

/// Teaching set for a unary pattern `0^k x1^p1 … xn^pn` (`pi ≤ m`) among
/// unary `m`-regular patterns.
///
/// `0^k` positive and `0^(k−i)` negative for `1 ≤ i ≤ min(k, m)` fix the
/// number of constants; then each set `S ⊆ {1, …, m}` of frequencies whose
/// language `0^k · S*` differs from the target's contributes the smallest
/// length where the two disagree. At most `2^m + m + 1` examples.
pub fn unary_mregular_set(p: &Pattern, m: usize, alpha: &Alphabet) -> Result<Sample> {
    if alpha.size() != Some(1) {
        return Err(pre("needs a one-letter alphabet"));
    }
    if p.max_freq() > m {
        return Err(pre(format!("a variable occurs more than m = {m} times")));
    }
    if m > 16 {
        return Err(pre("m is too large to enumerate frequency sets"));
    }
    let k = p.const_letters().len();
    let mut s = Sample::new();
    s.pos(unary_word(k))?;
    for i in 1..=k.min(m) {
        s.neg(unary_word(k - i))?;
    }
    let member = |q: &Pattern, n: usize| unary_membership(&BigUint::from(n), q);
    for mask in 0u32..1 << m {
        let mut syms = vec![Sym::Const(Letter(0)); k];
        for f in 1..=m {
            if mask >> (f - 1) & 1 == 1 {
                syms.extend(std::iter::repeat_n(Sym::Var(f as u32), f));
            }
        }
        // The all-constant rival with k = 0 is the empty word's language.
        let differs = |n: usize| match Pattern::new(syms.clone()) {
            Ok(q) => member(&q, n) != member(p, n),
            Err(_) => (n == 0) != member(p, n),
        };
        if let Some(n) = (k..=k + m).find(|&n| differs(n)) {
            s.insert(unary_word(n), member(p, n))?;
        }
    }
    validate(p, &s, alpha)?;
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::parse_pattern;
    use crate::sample::parse_sample;

    #[test]
    fn pbt_sets() {
        let a = Alphabet::parse("inf:01").unwrap();
        let p = |s: &str| parse_pattern(s, &a).unwrap();
        let s = |t: &str| parse_sample(t, &a).unwrap();
        assert_eq!(infinite_pbt_set(&p("x1 0 x1"), &a).unwrap(), s("+ 0\n+ a0 0 a0\n"));
        assert_eq!(infinite_pbt_set(&p("01"), &a).unwrap(), s("+ 01\n"));
        assert_eq!(infinite_pbt_set(&p("x1 x2"), &a).unwrap(), s("+ eps\n+ a0 a1\n"));
        assert_eq!(infinite_pbt_set(&p("x1 a0 x2"), &a).unwrap(), s("+ a0\n+ a1 a0 a2\n"));
        assert!(infinite_pbt_set(&p("x1"), &Alphabet::binary()).is_err());
    }

    #[test]
    fn mregular_sets() {
        let u = Alphabet::unary();
        let p = |s: &str| parse_pattern(s, &u).unwrap();
        let s = |t: &str| parse_sample(t, &u).unwrap();
        assert_eq!(unary_mregular_set(&p("00 x1^2"), 2, &u).unwrap(), s("+ 00\n- 0\n- eps\n+ 0000\n- 000\n"));
        assert_eq!(unary_mregular_set(&p("x1"), 1, &u).unwrap(), s("+ eps\n+ 0\n"));
        for m in 1..=4 {
            for t in ["x1", "0 x1^2", "000 x1^2 x2^3", "0000", "x1^3 x2^2"] {
                if let Ok(got) = unary_mregular_set(&p(t), m, &u) {
                    assert!(got.len() <= (1 << m) + m + 1);
                }
            }
        }
    }
}
