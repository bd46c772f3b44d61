//! Words stored as run-length blocks with arbitrary-precision exponents.
//!
//! A word is a sequence of factors. A factor is either a maximal letter run
//! `a^n`, or a power `(u)^t` of a short run sequence `u` whose first and last
//! letters differ. Powers keep constructions such as `(01)^{9!}` symbolic;
//! anything that needs explicit letters goes through [`Word::to_letters`],
//! which refuses words longer than a cap.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::alphabet::{Alphabet, Letter};
use crate::error::{Error, Result};

/// Default cap for materializing words (letters).
pub const DEFAULT_MATERIALIZE_CAP: usize = 1_000_000;

/// Longest run list a power base may expand to.
const BASE_RUN_CAP: usize = 1 << 20;

pub type Run = (Letter, BigUint);

/// A factor of a [`Word`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Factor {
    Run(Letter, BigUint),
    /// `(runs)^times`; `runs` has ≥ 2 entries, adjacent letters distinct,
    /// first letter ≠ last letter, and `times ≥ 2`.
    Power(Vec<Run>, BigUint),
}

/// A word over an alphabet; `ε` is the empty factor list.
///
/// Adjacent factors never share a boundary letter, so iterating the
/// factors yields the canonical (maximal) run decomposition.
#[derive(Clone, Debug, Default)]
pub struct Word {
    factors: Vec<Factor>,
    len: BigUint,
}

impl Word {
    pub fn empty() -> Self {
        Word::default()
    }

    pub fn letter(l: Letter) -> Self {
        Self::run(l, 1u32)
    }

    pub fn run(l: Letter, n: impl Into<BigUint>) -> Self {
        let mut w = Word::empty();
        w.push_run(l, n.into());
        w
    }

    pub fn from_letters(letters: &[Letter]) -> Self {
        let mut w = Word::empty();
        for &l in letters {
            w.push_run(l, BigUint::one());
        }
        w
    }

    pub fn from_runs<I: IntoIterator<Item = Run>>(runs: I) -> Self {
        let mut w = Word::empty();
        for (l, n) in runs {
            w.push_run(l, n);
        }
        w
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn len(&self) -> &BigUint {
        &self.len
    }

    /// Length as `usize`, if it fits.
    pub fn len_usize(&self) -> Option<usize> {
        self.len.to_usize()
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    fn last_letter(&self) -> Option<Letter> {
        match self.factors.last()? {
            Factor::Run(l, _) => Some(*l),
            Factor::Power(runs, _) => runs.last().map(|r| r.0),
        }
    }

    pub fn first_letter(&self) -> Option<Letter> {
        match self.factors.first()? {
            Factor::Run(l, _) => Some(*l),
            Factor::Power(runs, _) => runs.first().map(|r| r.0),
        }
    }

    /// Appends `l^n`, merging with a trailing run of the same letter.
    pub fn push_run(&mut self, l: Letter, n: BigUint) {
        if n.is_zero() {
            return;
        }
        self.len += &n;
        if self.last_letter() == Some(l) {
            if let Some(Factor::Power(..)) = self.factors.last() {
                self.peel_last_power();
            }
            if let Some(Factor::Run(_, e)) = self.factors.last_mut() {
                *e += n;
                return;
            }
            unreachable!("peeled power ends with a run");
        }
        self.factors.push(Factor::Run(l, n));
    }

    /// Rewrites a trailing `(u)^t` as `(u)^{t-1} u` so that `u`'s last run is exposed.
    fn peel_last_power(&mut self) {
        let Some(Factor::Power(runs, t)) = self.factors.pop() else { return };
        let t = t - 1u32;
        if t.is_one() {
            self.factors.extend(runs.iter().map(|(l, e)| Factor::Run(*l, e.clone())));
        } else {
            self.factors.push(Factor::Power(runs.clone(), t));
        }
        self.factors.extend(runs.into_iter().map(|(l, e)| Factor::Run(l, e)));
    }

    fn push_power_raw(&mut self, runs: Vec<Run>, mut times: BigUint) {
        debug_assert!(runs.len() >= 2 && runs[0].0 != runs[runs.len() - 1].0);
        if times.is_zero() {
            return;
        }
        if self.last_letter() == Some(runs[0].0) {
            for (l, e) in &runs {
                self.push_run(*l, e.clone());
            }
            times -= 1u32;
        }
        if times.is_zero() {
            return;
        }
        if times.is_one() {
            for (l, e) in runs {
                self.push_run(l, e);
            }
            return;
        }
        let base: BigUint = runs.iter().map(|r| &r.1).sum();
        self.len += base * &times;
        self.factors.push(Factor::Power(runs, times));
    }

    /// Appends `u^times` for a run list `u` in canonical form.
    fn push_power(&mut self, runs: Vec<Run>, times: BigUint) {
        if runs.is_empty() || times.is_zero() {
            return;
        }
        if runs.len() == 1 {
            let (l, e) = runs.into_iter().next().unwrap();
            self.push_run(l, e * times);
            return;
        }
        let k = runs.len();
        if runs[0].0 != runs[k - 1].0 {
            self.push_power_raw(runs, times);
            return;
        }
        // u = r1 … rk with r1, rk on the same letter: u^t = r1…r(k-1) (rk·r1 r2…r(k-1))^(t-1) rk
        for (l, e) in &runs[..k - 1] {
            self.push_run(*l, e.clone());
        }
        let mut inner = Vec::with_capacity(k - 1);
        inner.push((runs[0].0, &runs[k - 1].1 + &runs[0].1));
        inner.extend(runs[1..k - 1].iter().cloned());
        let t1 = &times - 1u32;
        if inner.len() == 1 {
            let (l, e) = inner.pop().unwrap();
            self.push_run(l, e * t1);
        } else {
            self.push_power_raw(inner, t1);
        }
        self.push_run(runs[k - 1].0, runs[k - 1].1.clone());
    }

    /// Appends another word.
    pub fn append(&mut self, other: &Word) {
        for f in &other.factors {
            match f {
                Factor::Run(l, e) => self.push_run(*l, e.clone()),
                Factor::Power(runs, t) => self.push_power_raw(runs.clone(), t.clone()),
            }
        }
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut w = self.clone();
        w.append(other);
        w
    }

    /// `self^n`. The base is expanded to its run list, so bases must be
    /// moderately sized; the exponent is unrestricted.
    pub fn pow(&self, n: &BigUint) -> Result<Word> {
        let mut w = Word::empty();
        if n.is_zero() || self.is_empty() {
            return Ok(w);
        }
        let runs = self.run_list(BASE_RUN_CAP)?;
        w.push_power(runs, n.clone());
        Ok(w)
    }

    /// Iterator over maximal runs.
    pub fn runs(&self) -> Runs<'_> {
        Runs { word: self, factor: 0, inner: 0, rep: BigUint::zero() }
    }

    /// All maximal runs, refusing more than `cap` of them.
    pub fn run_list(&self, cap: usize) -> Result<Vec<Run>> {
        let mut out = Vec::new();
        for r in self.runs() {
            if out.len() == cap {
                return Err(Error::TooLarge { len: self.len.to_string(), cap });
            }
            out.push(r);
        }
        Ok(out)
    }

    /// Explicit letters; errors if the word is longer than `cap`.
    pub fn to_letters(&self, cap: usize) -> Result<Vec<Letter>> {
        match self.len.to_usize() {
            Some(n) if n <= cap => {
                let mut out = Vec::with_capacity(n);
                for (l, e) in self.runs() {
                    let e = e.to_usize().expect("bounded by len");
                    out.extend(std::iter::repeat_n(l, e));
                }
                Ok(out)
            }
            _ => Err(Error::TooLarge { len: self.len.to_string(), cap }),
        }
    }

    /// Letters occurring in the word.
    pub fn letter_set(&self) -> BTreeSet<Letter> {
        let mut s = BTreeSet::new();
        for f in &self.factors {
            match f {
                Factor::Run(l, _) => {
                    s.insert(*l);
                }
                Factor::Power(runs, _) => s.extend(runs.iter().map(|r| r.0)),
            }
        }
        s
    }

    /// Number of occurrences of `l`.
    pub fn count(&self, l: Letter) -> BigUint {
        let mut c = BigUint::zero();
        for f in &self.factors {
            match f {
                Factor::Run(m, e) if *m == l => c += e,
                Factor::Run(..) => {}
                Factor::Power(runs, t) => {
                    let per: BigUint = runs.iter().filter(|r| r.0 == l).map(|r| &r.1).sum();
                    c += per * t;
                }
            }
        }
        c
    }

    /// Renders in the word grammar; `eps` for ε.
    pub fn render(&self, alpha: &Alphabet) -> String {
        if self.is_empty() {
            return "eps".into();
        }
        let braces = alpha.has_digit_letters();
        let mut out = String::new();
        let mut prev_fresh = false;
        let put_letter = |out: &mut String, l: Letter, prev_fresh: &mut bool| {
            let name = alpha.name(l);
            if *prev_fresh && name.starts_with(|c: char| c.is_ascii_digit()) {
                out.push(' ');
            }
            out.push_str(&name);
            *prev_fresh = alpha.is_fresh(l);
        };
        let exp_text = |e: &BigUint| {
            let s = e.to_string();
            if braces && s.len() > 1 {
                format!("^{{{s}}}")
            } else {
                format!("^{s}")
            }
        };
        let put_exp = |out: &mut String, e: &BigUint, prev_fresh: &mut bool| {
            out.push_str(&exp_text(e));
            *prev_fresh = false;
        };
        // Short runs are spelled out when that is no longer than `l^e`.
        let put_run = |out: &mut String, l: Letter, e: &BigUint, prev_fresh: &mut bool| {
            let name_len = alpha.name(l).len();
            let literal = e.to_usize().filter(|&n| n * name_len <= name_len + exp_text(e).len());
            match literal {
                Some(n) => (0..n).for_each(|_| put_letter(out, l, prev_fresh)),
                None => {
                    put_letter(out, l, prev_fresh);
                    put_exp(out, e, prev_fresh);
                }
            }
        };
        for f in &self.factors {
            match f {
                Factor::Run(l, e) => put_run(&mut out, *l, e, &mut prev_fresh),
                Factor::Power(runs, t) => {
                    out.push('(');
                    prev_fresh = false;
                    for (l, e) in runs {
                        put_run(&mut out, *l, e, &mut prev_fresh);
                    }
                    out.push(')');
                    put_exp(&mut out, t, &mut prev_fresh);
                }
            }
        }
        out
    }
}

impl PartialEq for Word {
    fn eq(&self, other: &Word) -> bool {
        self.len == other.len && self.runs().eq(other.runs())
    }
}

impl Eq for Word {}

/// Lazy iterator over the maximal runs of a word.
pub struct Runs<'a> {
    word: &'a Word,
    factor: usize,
    inner: usize,
    rep: BigUint,
}

impl Iterator for Runs<'_> {
    type Item = Run;

    fn next(&mut self) -> Option<Run> {
        let f = self.word.factors.get(self.factor)?;
        match f {
            Factor::Run(l, e) => {
                self.factor += 1;
                Some((*l, e.clone()))
            }
            Factor::Power(runs, t) => {
                let r = runs[self.inner].clone();
                self.inner += 1;
                if self.inner == runs.len() {
                    self.inner = 0;
                    self.rep += 1u32;
                    if &self.rep == t {
                        self.rep = BigUint::zero();
                        self.factor += 1;
                    }
                }
                Some(r)
            }
        }
    }
}

/// Parses the word grammar `word := term*`, `term := atom ('^' nat)?`,
/// `atom := letter | '(' word ')'`; `eps` denotes ε. Whitespace between
/// terms is ignored.
///
/// Exponents: if the alphabet has digit letters, a bare `^` takes exactly
/// one digit (so `0^61` is `0^6 1`) and longer exponents are written `^{1260}`;
/// otherwise `^` takes the maximal digit run.
pub fn parse_word(text: &str, alpha: &Alphabet) -> Result<Word> {
    let trimmed = text.trim();
    if trimmed == "eps" || trimmed == "ε" {
        return Ok(Word::empty());
    }
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut p = WordParser { chars: &chars, i: 0, alpha, end: text.len() };
    let w = p.word()?;
    p.skip_ws();
    if p.i < chars.len() {
        return Err(p.err("unbalanced `)`"));
    }
    Ok(w)
}

struct WordParser<'a> {
    chars: &'a [(usize, char)],
    i: usize,
    alpha: &'a Alphabet,
    end: usize,
}

impl WordParser<'_> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.i).map(|c| c.1)
    }

    fn pos(&self) -> usize {
        self.chars.get(self.i).map_or(self.end, |c| c.0)
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse { pos: self.pos(), msg: msg.into() }
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.i += 1;
        }
    }

    fn word(&mut self) -> Result<Word> {
        let mut w = Word::empty();
        loop {
            self.skip_ws();
            match self.peek() {
                None | Some(')') => return Ok(w),
                Some('(') => {
                    self.i += 1;
                    let inner = self.word()?;
                    if self.peek() != Some(')') {
                        return Err(self.err("unbalanced `(`"));
                    }
                    self.i += 1;
                    let t = self.exponent()?;
                    w.append(&inner.pow(&t)?);
                }
                Some(_) => {
                    let l = self.letter()?;
                    let t = self.exponent()?;
                    w.push_run(l, t);
                }
            }
        }
    }

    fn letter(&mut self) -> Result<Letter> {
        let c = self.peek().expect("caller checked");
        if let Some(l) = self.alpha.seed_letter(c) {
            self.i += 1;
            return Ok(l);
        }
        if !self.alpha.is_finite() && c == self.alpha.fresh_prefix() {
            let start = self.i;
            self.i += 1;
            while self.peek().is_some_and(|d| d.is_ascii_digit()) {
                self.i += 1;
            }
            let name: String = self.chars[start..self.i].iter().map(|c| c.1).collect();
            return self.alpha.lookup(&name);
        }
        if c == '^' {
            return Err(self.err("`^` without a base"));
        }
        Err(Error::UnknownLetter(c.to_string()))
    }

    fn exponent(&mut self) -> Result<BigUint> {
        if self.peek() != Some('^') {
            return Ok(BigUint::one());
        }
        self.i += 1;
        let start = self.i;
        let digits: String = if self.peek() == Some('{') {
            self.i += 1;
            let s = self.i;
            while self.peek().is_some_and(|d| d.is_ascii_digit()) {
                self.i += 1;
            }
            if self.peek() != Some('}') {
                return Err(self.err("expected `}`"));
            }
            self.i += 1;
            self.chars[s..self.i - 1].iter().map(|c| c.1).collect()
        } else if self.alpha.has_digit_letters() {
            if self.peek().is_some_and(|d| d.is_ascii_digit()) {
                self.i += 1;
            }
            self.chars[start..self.i].iter().map(|c| c.1).collect()
        } else {
            while self.peek().is_some_and(|d| d.is_ascii_digit()) {
                self.i += 1;
            }
            self.chars[start..self.i].iter().map(|c| c.1).collect()
        };
        if digits.is_empty() {
            return Err(self.err("expected exponent"));
        }
        let n: BigUint = digits.parse().map_err(|_| self.err("bad exponent"))?;
        if n.is_zero() {
            return Err(self.err("zero exponent"));
        }
        Ok(n)
    }
}

/// `u ⊑ w`: `u` is a scattered subsequence of `w`. Greedy over runs.
pub fn subsequence(u: &Word, w: &Word) -> bool {
    if u.len() > w.len() {
        return false;
    }
    let mut wr = w.runs();
    let mut cur: Option<Run> = None;
    for (l, mut need) in u.runs() {
        while !need.is_zero() {
            if cur.is_none() {
                cur = wr.next();
            }
            let Some((cl, avail)) = cur.as_mut() else { return false };
            if *cl != l {
                cur = None;
                continue;
            }
            if *avail > need {
                *avail -= &need;
                need = BigUint::zero();
            } else {
                need -= &*avail;
                cur = None;
            }
        }
    }
    true
}
