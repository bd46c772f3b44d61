//! Alphabets: finite ordered letter lists, or unbounded alphabets with a
//! deterministic supply of fresh letters.

use std::fmt;

use crate::error::{Error, Result};

/// A letter, identified by its index in alphabet order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Letter(pub u32);

impl Letter {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

const RESERVED: &[char] = &['x', '(', ')', '^', '{', '}', '#'];

/// An ordered alphabet.
///
/// Seed letters are single characters. An unbounded alphabet continues
/// after its seeds with fresh letters `a0, a1, …` (the prefix moves to the
/// next free character if `a` is itself a seed). `x` is never a letter, so a
/// token `x<digits>` is always a variable.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Alphabet {
    seeds: Vec<char>,
    unbounded: bool,
    fresh_prefix: char,
}

impl Alphabet {
    pub fn finite<I: IntoIterator<Item = char>>(letters: I) -> Result<Self> {
        Self::build(letters.into_iter().collect(), false)
    }

    pub fn unbounded<I: IntoIterator<Item = char>>(seeds: I) -> Result<Self> {
        Self::build(seeds.into_iter().collect(), true)
    }

    /// `{0,1}`.
    pub fn binary() -> Self {
        Self::finite(['0', '1']).expect("valid")
    }

    /// `{0}`.
    pub fn unary() -> Self {
        Self::finite(['0']).expect("valid")
    }

    /// `{0,1,2}`.
    pub fn ternary() -> Self {
        Self::finite(['0', '1', '2']).expect("valid")
    }

    /// Parses `"01"` (finite) or `"inf:01"` (unbounded with seeds `0`, `1`).
    pub fn parse(spec: &str) -> Result<Self> {
        match spec.strip_prefix("inf:") {
            Some(seeds) => Self::unbounded(seeds.chars()),
            None => Self::finite(spec.chars()),
        }
    }

    fn build(seeds: Vec<char>, unbounded: bool) -> Result<Self> {
        if seeds.is_empty() && !unbounded {
            return Err(Error::Precondition("alphabet must be nonempty".into()));
        }
        for (i, &c) in seeds.iter().enumerate() {
            if c.is_whitespace() || RESERVED.contains(&c) {
                return Err(Error::Precondition(format!("`{c}` cannot be an alphabet letter")));
            }
            if seeds[..i].contains(&c) {
                return Err(Error::Precondition(format!("duplicate letter `{c}`")));
            }
        }
        let fresh_prefix = ('a'..='z').find(|c| *c != 'x' && !seeds.contains(c)).expect("some prefix is free");
        Ok(Alphabet { seeds, unbounded, fresh_prefix })
    }

    pub fn is_finite(&self) -> bool {
        !self.unbounded
    }

    /// Number of letters; `None` for unbounded alphabets.
    pub fn size(&self) -> Option<usize> {
        (!self.unbounded).then_some(self.seeds.len())
    }

    pub fn seed_count(&self) -> usize {
        self.seeds.len()
    }

    /// The finite letter list, or the seeds of an unbounded alphabet.
    pub fn letters(&self) -> Vec<Letter> {
        (0..self.seeds.len() as u32).map(Letter).collect()
    }

    /// The `i`-th fresh letter of an unbounded alphabet.
    pub fn fresh(&self, i: usize) -> Letter {
        debug_assert!(self.unbounded);
        Letter((self.seeds.len() + i) as u32)
    }

    pub fn is_fresh(&self, l: Letter) -> bool {
        l.index() >= self.seeds.len()
    }

    pub fn contains(&self, l: Letter) -> bool {
        self.unbounded || l.index() < self.seeds.len()
    }

    /// True if some letter is an ASCII digit; exponent syntax depends on it.
    pub fn has_digit_letters(&self) -> bool {
        self.seeds.iter().any(|c| c.is_ascii_digit())
    }

    pub fn fresh_prefix(&self) -> char {
        self.fresh_prefix
    }

    pub fn name(&self, l: Letter) -> String {
        match self.seeds.get(l.index()) {
            Some(c) => c.to_string(),
            None => format!("{}{}", self.fresh_prefix, l.index() - self.seeds.len()),
        }
    }

    pub fn seed_letter(&self, c: char) -> Option<Letter> {
        self.seeds.iter().position(|&s| s == c).map(|i| Letter(i as u32))
    }

    pub fn lookup(&self, name: &str) -> Result<Letter> {
        let mut chars = name.chars();
        if let (Some(c), None) = (chars.next(), chars.clone().next()) {
            if let Some(l) = self.seed_letter(c) {
                return Ok(l);
            }
        }
        if self.unbounded {
            if let Some(digits) = name.strip_prefix(self.fresh_prefix) {
                if !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit()) {
                    if let Ok(i) = digits.parse::<usize>() {
                        return Ok(self.fresh(i));
                    }
                }
            }
        }
        Err(Error::UnknownLetter(name.to_string()))
    }

    /// For a binary alphabet, the other letter (written δ̄).
    pub fn complement(&self, l: Letter) -> Option<Letter> {
        match (self.size(), l.0) {
            (Some(2), 0) => Some(Letter(1)),
            (Some(2), 1) => Some(Letter(0)),
            _ => None,
        }
    }

    /// The smallest letter (in alphabet order) not in `avoid`.
    pub fn smallest_except(&self, avoid: &[Letter]) -> Option<Letter> {
        let limit = if self.unbounded { self.seeds.len() + avoid.len() + 1 } else { self.seeds.len() };
        (0..limit as u32).map(Letter).find(|l| !avoid.contains(l))
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.unbounded {
            write!(f, "inf:")?;
        }
        for c in &self.seeds {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}
