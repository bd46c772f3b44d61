//! Patterns: nonempty strings over variables and constant letters.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigUint;

use crate::alphabet::{Alphabet, Letter};
use crate::error::{Error, Result};
use crate::word::{parse_word, Word};

/// A pattern symbol: a variable `x_i` (`i ≥ 1`) or a constant letter.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Sym {
    Var(u32),
    Const(Letter),
}

impl Sym {
    pub fn is_var(self) -> bool {
        matches!(self, Sym::Var(_))
    }
}

/// A nonempty pattern. Derived data (frequencies, skeleton) is computed on
/// demand; patterns are short.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Pattern {
    syms: Vec<Sym>,
}

impl Pattern {
    pub fn new(syms: Vec<Sym>) -> Result<Self> {
        if syms.is_empty() {
            return Err(Error::EmptyPattern);
        }
        if syms.contains(&Sym::Var(0)) {
            return Err(Error::Precondition("variable indices are positive".into()));
        }
        Ok(Pattern { syms })
    }

    /// `x1^e1 x2^e2 …` (a non-cross pattern).
    pub fn noncross(exps: &[u32]) -> Result<Self> {
        let mut syms = Vec::new();
        for (i, &e) in exps.iter().enumerate() {
            syms.extend(std::iter::repeat_n(Sym::Var(i as u32 + 1), e as usize));
        }
        Pattern::new(syms)
    }

    /// `x1 a1 x2 … ak x(k+1)` for the skeleton `a1…ak`.
    pub fn sbr_from_skeleton(skel: &[Letter]) -> Self {
        let mut syms = vec![Sym::Var(1)];
        for (i, &a) in skel.iter().enumerate() {
            syms.push(Sym::Const(a));
            syms.push(Sym::Var(i as u32 + 2));
        }
        Pattern { syms }
    }

    pub fn syms(&self) -> &[Sym] {
        &self.syms
    }

    pub fn len(&self) -> usize {
        self.syms.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Distinct variables in order of first occurrence.
    pub fn vars(&self) -> Vec<u32> {
        let mut seen = Vec::new();
        for s in &self.syms {
            if let Sym::Var(v) = *s {
                if !seen.contains(&v) {
                    seen.push(v);
                }
            }
        }
        seen
    }

    pub fn var_freqs(&self) -> BTreeMap<u32, usize> {
        let mut m = BTreeMap::new();
        for s in &self.syms {
            if let Sym::Var(v) = *s {
                *m.entry(v).or_insert(0) += 1;
            }
        }
        m
    }

    /// Maximum variable frequency (0 for constant patterns).
    pub fn max_freq(&self) -> usize {
        self.var_freqs().values().copied().max().unwrap_or(0)
    }

    pub fn const_letters(&self) -> Vec<Letter> {
        self.syms
            .iter()
            .filter_map(|s| match s {
                Sym::Const(l) => Some(*l),
                Sym::Var(_) => None,
            })
            .collect()
    }

    /// `Const(π)`.
    pub fn const_set(&self) -> BTreeSet<Letter> {
        self.const_letters().into_iter().collect()
    }

    /// `π(ε)`.
    pub fn skeleton(&self) -> Word {
        Word::from_letters(&self.const_letters())
    }

    pub fn is_constant_free(&self) -> bool {
        self.syms.iter().all(|s| s.is_var())
    }

    pub fn is_constant(&self) -> bool {
        !self.syms.iter().any(|s| s.is_var())
    }

    /// Renames variables `x1, x2, …` by order of first occurrence.
    pub fn normalize(&self) -> Pattern {
        let order = self.vars();
        let map: HashMap<u32, u32> = order.iter().enumerate().map(|(i, &v)| (v, i as u32 + 1)).collect();
        Pattern {
            syms: self
                .syms
                .iter()
                .map(|s| match *s {
                    Sym::Var(v) => Sym::Var(map[&v]),
                    c => c,
                })
                .collect(),
        }
    }

    /// Applies a substitution; variables missing from `h` map to ε.
    pub fn substitute(&self, h: &HashMap<u32, Word>) -> Word {
        let mut w = Word::empty();
        for s in &self.syms {
            match s {
                Sym::Const(l) => w.push_run(*l, BigUint::from(1u32)),
                Sym::Var(v) => {
                    if let Some(img) = h.get(v) {
                        w.append(img);
                    }
                }
            }
        }
        w
    }

    /// Applies a substitution given as explicit letter strings.
    pub fn substitute_letters(&self, h: &HashMap<u32, Vec<Letter>>) -> Vec<Letter> {
        let mut out = Vec::new();
        for s in &self.syms {
            match s {
                Sym::Const(l) => out.push(*l),
                Sym::Var(v) => {
                    if let Some(img) = h.get(v) {
                        out.extend_from_slice(img);
                    }
                }
            }
        }
        out
    }

    /// Renders in the pattern grammar; runs of one variable become `x1^k`.
    pub fn render(&self, alpha: &Alphabet) -> String {
        let mut toks: Vec<String> = Vec::new();
        let mut i = 0;
        while i < self.syms.len() {
            match self.syms[i] {
                Sym::Var(v) => {
                    let mut j = i;
                    while j < self.syms.len() && self.syms[j] == Sym::Var(v) {
                        j += 1;
                    }
                    toks.push(if j - i == 1 { format!("x{v}") } else { format!("x{v}^{}", j - i) });
                    i = j;
                }
                Sym::Const(_) => {
                    let mut j = i;
                    let mut letters = Vec::new();
                    while let Some(Sym::Const(l)) = self.syms.get(j) {
                        letters.push(*l);
                        j += 1;
                    }
                    toks.push(Word::from_letters(&letters).render(alpha));
                    i = j;
                }
            }
        }
        toks.join(" ")
    }
}

/// Parses whitespace-separated tokens: `x<digits>[^<digits>]` is a variable
/// (the exponent repeats it); any other token is a constant run in the word
/// grammar, or `(<letters>)^<digits>`. `x10` is variable 10.
pub fn parse_pattern(text: &str, alpha: &Alphabet) -> Result<Pattern> {
    let mut syms = Vec::new();
    let mut offset = 0;
    for tok in text.split_whitespace() {
        let pos = text[offset..].find(tok).map_or(offset, |p| p + offset);
        offset = pos + tok.len();
        let bad = |msg: &str| Error::Parse { pos, msg: format!("{msg} in token `{tok}`") };
        if let Some(rest) = tok.strip_prefix('x') {
            let (idx, exp) = match rest.split_once('^') {
                Some((a, b)) => (a, Some(b)),
                None => (rest, None),
            };
            if idx.is_empty() || !idx.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad("malformed variable"));
            }
            let v: u32 = idx.parse().map_err(|_| bad("variable index too large"))?;
            if v == 0 {
                return Err(bad("variable indices start at 1"));
            }
            let k = match exp {
                None => 1,
                Some(e) if !e.is_empty() && e.bytes().all(|b| b.is_ascii_digit()) => {
                    e.parse::<usize>().map_err(|_| bad("exponent too large"))?
                }
                Some(_) => return Err(bad("malformed exponent")),
            };
            if k == 0 {
                return Err(bad("zero exponent"));
            }
            syms.extend(std::iter::repeat_n(Sym::Var(v), k));
            continue;
        }
        let word = match tok.rsplit_once(")^") {
            Some((base, e)) if base.starts_with('(') && !e.is_empty() && e.bytes().all(|b| b.is_ascii_digit()) => {
                let t: BigUint = e.parse().map_err(|_| bad("malformed exponent"))?;
                if t == BigUint::from(0u32) {
                    return Err(bad("zero exponent"));
                }
                parse_word(&base[1..], alpha)?.pow(&t)?
            }
            _ => parse_word(tok, alpha)?,
        };
        if word.is_empty() {
            return Err(bad("empty constant"));
        }
        let letters = word.to_letters(1 << 16)?;
        syms.extend(letters.into_iter().map(Sym::Const));
    }
    Pattern::new(syms)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Pattern {
        parse_pattern(s, &Alphabet::binary()).unwrap()
    }

    #[test]
    fn tokenizes() {
        let q = p("x1 0 x2 0 x3");
        assert_eq!(q.syms(), &[Sym::Var(1), Sym::Const(Letter(0)), Sym::Var(2), Sym::Const(Letter(0)), Sym::Var(3)]);
    }

    #[test]
    fn exponents_expand() {
        let q = p("x1^4 x2^8 x3^9");
        assert_eq!(q.len(), 21);
        assert_eq!(q.render(&Alphabet::binary()), "x1^4 x2^8 x3^9");
        assert_eq!(p("(01)^3 x1").len(), 7);
    }

    #[test]
    fn x10_is_variable_ten() {
        assert_eq!(p("x10").syms(), &[Sym::Var(10)]);
    }

    #[test]
    fn errors() {
        let a = Alphabet::binary();
        assert_eq!(parse_pattern("  ", &a), Err(Error::EmptyPattern));
        assert!(matches!(parse_pattern("x", &a), Err(Error::Parse { .. })));
        assert!(matches!(parse_pattern("x0", &a), Err(Error::Parse { .. })));
        assert!(matches!(parse_pattern("x1^", &a), Err(Error::Parse { .. })));
        assert!(matches!(parse_pattern("x1 2", &a), Err(Error::UnknownLetter(_))));
    }

    #[test]
    fn normalize_examples() {
        let a = Alphabet::binary();
        assert_eq!(p("x5 0 x5 x2").normalize().render(&a), "x1 0 x1 x2");
        assert_eq!(p("x3 x1 x3").normalize().render(&a), "x1 x2 x1");
        let n = p("x1 0 x2");
        assert_eq!(n.normalize(), n);
    }

    #[test]
    fn skeleton_and_freqs() {
        let q = p("x1 0 x2 x1 1");
        assert_eq!(q.skeleton().render(&Alphabet::binary()), "01");
        assert_eq!(q.max_freq(), 2);
        assert_eq!(q.vars(), vec![1, 2]);
    }
}
