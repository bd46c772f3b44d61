//! Simple block-regular patterns `x1 a1 x2 … a(n−1) xn`.

use num_bigint::BigUint;
use num_traits::One;

use super::{sample_of, ternary, unary_word, validate};
use crate::alphabet::{Alphabet, Letter};
use crate::class::sbr_canonicalize;
use crate::error::{pre, Result};
use crate::pattern::{Pattern, Sym};
use crate::sample::Sample;
use crate::verifier::unary_canonical;
use crate::word::{Word, DEFAULT_MATERIALIZE_CAP};

/// For `w = δ1^m1 … δk^mk` (maximal runs), the word
/// `∏_{i<k} δi^(mi−1) δ(i+1)^m(i+1) δi · δk^(mk−1)`: it lies in the language
/// of every simple block-regular pattern whose skeleton is a proper
/// subsequence of `w`, but not in that of the pattern with skeleton `w`.
pub fn hat_word(w: &Word) -> Result<Word> {
    let runs = w.run_list(DEFAULT_MATERIALIZE_CAP)?;
    if runs.is_empty() {
        return Err(pre("hat_word needs a nonempty word"));
    }
    let mut out = Word::empty();
    for pair in runs.windows(2) {
        let ((d, m), (e, n)) = (&pair[0], &pair[1]);
        out.push_run(*d, m - 1u32);
        out.push_run(*e, n.clone());
        out.push_run(*d, BigUint::one());
    }
    let (d, m) = runs.last().expect("nonempty");
    out.push_run(*d, m - 1u32);
    Ok(out)
}

fn skeleton_of(p: &Pattern) -> Result<Vec<Letter>> {
    let c = sbr_canonicalize(p).ok_or_else(|| pre("pattern is not simple block-regular"))?;
    Ok(c.const_letters())
}

/// Two examples: `(π(ε), +)` and `(ŵ(π(ε)), −)`; `x1` needs only `(ε, +)`.
pub fn sr_td_set(p: &Pattern) -> Result<Sample> {
    let skel = skeleton_of(p)?;
    if skel.is_empty() {
        return sample_of(vec![(vec![], true)]);
    }
    let w = Word::from_letters(&skel);
    Sample::from_examples([(w.clone(), true), (hat_word(&w)?, false)])
}

/// `{(π(ε), +)}`, for the preference that favours longer skeletons.
pub fn sr_pbt_set(p: &Pattern) -> Result<Sample> {
    let skel = skeleton_of(p)?;
    sample_of(vec![(skel, true)])
}

/// A three-example set for `p` among all regular patterns.
///
/// `p` must already be in the form `x1 a1 x2 … xn`. Over one letter the
/// set is `{0^m, 0^(m+1)}` positive and `0^(m−1)` negative; over two
/// letters the positives fill each variable with the complement of a
/// neighbouring equal letter (`w1`) or bridge a `δδ̄` boundary (`w2`); over
/// three or more letters see [`ternary`].
///
/// Over two letters this is a teaching set only when the skeleton is a
/// single repeated letter: a boundary `δ x δ̄` filled with `δ` lets a rival
/// with one more `δ` in its skeleton through (for `x1 1 x2 0 x3`, the rival
/// `x1 1 x2 1 x3` is consistent with `{+0101, +110, −01}`). The sets are
/// still consistent with `p`; use
/// [`brute_force_td`](crate::verifier::brute_force_td) for a verified set.
pub fn sr_vs_regular_set(p: &Pattern, alpha: &Alphabet) -> Result<Sample> {
    let skel = skeleton_of(p)?;
    if p.normalize() != Pattern::sbr_from_skeleton(&skel) {
        return Err(pre("sr_vs_regular_set needs the form x1 a1 x2 … xn"));
    }
    let sample = match alpha.size() {
        Some(1) => unary_three(skel.len())?,
        _ if skel.is_empty() => sample_of(vec![(vec![], true)])?,
        Some(2) => {
            let (w1, w2) = binary_positives(&skel, alpha);
            let w3 = hat_word(&Word::from_letters(&skel))?;
            Sample::from_examples([(Word::from_letters(&w1), true), (Word::from_letters(&w2), true), (w3, false)])?
        }
        _ => {
            let (w1, w2, w3) = ternary::sets(&skel, alpha)?;
            sample_of(vec![(w1, true), (w2, true), (w3, false)])?
        }
    };
    validate(p, &sample, alpha)?;
    Ok(sample)
}

fn unary_three(m: usize) -> Result<Sample> {
    if m == 0 {
        return Sample::from_examples([(Word::empty(), true), (unary_word(1), true)]);
    }
    Sample::from_examples([(unary_word(m), true), (unary_word(m + 1), true), (unary_word(m - 1), false)])
}

fn binary_positives(skel: &[Letter], alpha: &Alphabet) -> (Vec<Letter>, Vec<Letter>) {
    let bar = |l: Letter| alpha.complement(l).expect("binary");
    let n = skel.len() + 1;
    let (mut w1, mut w2) = (Vec::new(), Vec::new());
    for i in 0..n {
        if i > 0 {
            w1.push(skel[i - 1]);
            w2.push(skel[i - 1]);
        }
        if i == 0 {
            w1.push(bar(skel[0]));
        } else if i == n - 1 {
            w1.push(bar(skel[n - 2]));
        } else {
            let (d, e) = (skel[i - 1], skel[i]);
            if d == e {
                w1.push(bar(d));
            } else {
                w2.push(d);
            }
        }
    }
    (w1, w2)
}

/// A teaching set for `p` among all patterns, over one letter (where `p`
/// must be equivalent to `0^m x1`) or over an unbounded alphabet (where `p`
/// must be simple block-regular).
pub fn sr_vs_all_set(p: &Pattern, alpha: &Alphabet) -> Result<Sample> {
    let sample = match alpha.size() {
        Some(1) => {
            let c = unary_canonical(p);
            let m = c.const_letters().len();
            let mut want = vec![Sym::Const(Letter(0)); m];
            want.push(Sym::Var(1));
            if c.syms() != want.as_slice() {
                return Err(pre("over one letter the pattern must be equivalent to 0^m x1"));
            }
            unary_three(m)?
        }
        Some(_) => return Err(pre("no construction for finite alphabets with two or more letters")),
        None => {
            let skel = skeleton_of(p)?;
            if skel.is_empty() {
                sample_of(vec![(vec![], true), (vec![alpha.letters()[0]], true)])?
            } else {
                let used: Vec<Letter> = p.const_letters();
                let mut fresh = (0..).map(|i| alpha.fresh(i)).filter(|l| !used.contains(l));
                let mut filled = Vec::new();
                for (i, &a) in skel.iter().enumerate() {
                    filled.push(fresh.next().expect("infinite"));
                    filled.push(a);
                    if i == skel.len() - 1 {
                        filled.push(fresh.next().expect("infinite"));
                    }
                }
                let w = Word::from_letters(&skel);
                Sample::from_examples([(w.clone(), true), (Word::from_letters(&filled), true), (hat_word(&w)?, false)])?
            }
        }
    };
    validate(p, &sample, alpha)?;
    Ok(sample)
}

/// For `π_n = x1 0 x2 0 … 0 x(n+1)`: `0^n` positive, every shorter power of
/// `0` negative, and `π_n` with one variable set to `1` (the rest erased)
/// positive — `2n + 2` examples.
pub fn sr_zero_chain_set(n: usize, alpha: &Alphabet) -> Result<Sample> {
    if n == 0 {
        return Err(pre("n must be at least 1"));
    }
    if alpha.size().is_some_and(|s| s < 2) {
        return Err(pre("the alphabet needs the letters 0 and 1"));
    }
    let (zero, one) = (Letter(0), Letter(1));
    let mut ex = vec![(vec![zero; n], true)];
    ex.extend((0..n).map(|k| (vec![zero; k], false)));
    for i in 0..=n {
        let mut w = vec![zero; n];
        w.insert(i, one);
        ex.push((w, true));
    }
    let sample = sample_of(ex)?;
    let p = Pattern::sbr_from_skeleton(&vec![zero; n]);
    validate(&p, &sample, alpha)?;
    Ok(sample)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::parse_pattern;
    use crate::sample::parse_sample;
    use crate::word::parse_word;

    fn hat(s: &str, a: &Alphabet) -> Word {
        hat_word(&parse_word(s, a).unwrap()).unwrap()
    }

    #[test]
    fn hat_examples() {
        let b = Alphabet::binary();
        assert_eq!(hat("0", &b), Word::empty());
        assert_eq!(hat("0011", &b), parse_word("01101", &b).unwrap());
        let t = Alphabet::ternary();
        assert_eq!(hat("012", &t), parse_word("1021", &t).unwrap());
        assert!(hat_word(&Word::empty()).is_err());
    }

    #[test]
    fn td_sets() {
        let a = Alphabet::binary();
        let p = |s: &str| parse_pattern(s, &a).unwrap();
        let s = |t: &str| parse_sample(t, &a).unwrap();
        assert_eq!(sr_td_set(&p("x1 0 x2 0 x3")).unwrap(), s("+ 00\n- 0\n"));
        assert_eq!(sr_td_set(&p("x1")).unwrap(), s("+ eps\n"));
        assert_eq!(sr_td_set(&p("x1 0 x2 1 x3")).unwrap(), s("+ 01\n- 10\n"));
        assert!(sr_pbt_set(&p("x1 01 x2")).is_err());
        assert_eq!(sr_pbt_set(&p("x1 0 x2 1 x3")).unwrap(), s("+ 01\n"));
        assert_eq!(sr_pbt_set(&p("x1")).unwrap(), s("+ eps\n"));
    }

    #[test]
    fn regular_binary_golden() {
        let a = Alphabet::binary();
        let p = parse_pattern("x1 0 x2 0 x3 1 x4 1 x5", &a).unwrap();
        let got = sr_vs_regular_set(&p, &a).unwrap();
        assert_eq!(got, parse_sample("+ 10101010\n+ 00011\n- 01101\n", &a).unwrap());
        assert!(sr_vs_regular_set(&parse_pattern("x1 x2 0 x3", &a).unwrap(), &a).is_err());
    }

    #[test]
    fn regular_other_alphabets() {
        let u = Alphabet::unary();
        let p = parse_pattern("x1 0 x2 0 x3", &u).unwrap();
        assert_eq!(sr_vs_regular_set(&p, &u).unwrap(), parse_sample("+ 00\n+ 000\n- 0\n", &u).unwrap());
        let t = Alphabet::ternary();
        let p = parse_pattern("x1 0 x2", &t).unwrap();
        assert_eq!(sr_vs_regular_set(&p, &t).unwrap(), parse_sample("+ 0\n+ 101\n- eps\n", &t).unwrap());
    }

    #[test]
    fn all_patterns() {
        let u = Alphabet::unary();
        let p = parse_pattern("00 x1", &u).unwrap();
        assert_eq!(sr_vs_all_set(&p, &u).unwrap(), parse_sample("+ 00\n+ 000\n- 0\n", &u).unwrap());
        let inf = Alphabet::parse("inf:01").unwrap();
        let p = parse_pattern("x1 0 x2", &inf).unwrap();
        assert_eq!(sr_vs_all_set(&p, &inf).unwrap(), parse_sample("+ 0\n+ a0 0 a1\n- eps\n", &inf).unwrap());
        let p = parse_pattern("x1", &inf).unwrap();
        assert_eq!(sr_vs_all_set(&p, &inf).unwrap(), parse_sample("+ eps\n+ 0\n", &inf).unwrap());
        assert!(sr_vs_all_set(&parse_pattern("x1", &Alphabet::binary()).unwrap(), &Alphabet::binary()).is_err());
    }

    #[test]
    fn zero_chain() {
        let a = Alphabet::binary();
        assert_eq!(sr_zero_chain_set(1, &a).unwrap(), parse_sample("+ 0\n- eps\n+ 10\n+ 01\n", &a).unwrap());
        let s = sr_zero_chain_set(2, &a).unwrap();
        assert_eq!(s, parse_sample("+ 00\n- eps\n- 0\n+ 100\n+ 010\n+ 001\n", &a).unwrap());
        for n in 1..6 {
            assert_eq!(sr_zero_chain_set(n, &a).unwrap().len(), 2 * n + 2);
        }
    }
}
