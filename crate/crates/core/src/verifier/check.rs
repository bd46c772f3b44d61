//! Bounded verification of teaching sets and preference-based teaching sets.

use std::fmt::Write as _;
use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;

use crate::alphabet::{Alphabet, Letter};
use crate::class::{noncross_exponents, sbr_canonicalize, ClassSpec};
use crate::error::{Error, Result};
use crate::matcher::membership;
use crate::pattern::Pattern;
use crate::sample::Sample;
use crate::verifier::enumerate::{canonical_form, enumerate_with_letters};
use crate::verifier::equiv::{bounded_disagreement, decide_equivalence, Equivalence};
use crate::verifier::prefs::PreferenceOrder;
use crate::word::Word;

/// Search bounds: rivals up to `max_pattern_len` symbols (skeleton length
/// for simple block-regular classes), words up to `max_word_len` letters.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub max_pattern_len: usize,
    pub max_word_len: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { max_pattern_len: 8, max_word_len: 8 }
    }
}

impl Bounds {
    pub fn new(max_pattern_len: usize, max_word_len: usize) -> Self {
        Bounds { max_pattern_len, max_word_len }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Confirmed,
    /// A rival consistent with the sample whose language differs.
    Refuted {
        rival: Pattern,
        separator: Option<Word>,
    },
    /// A consistent rival that could be neither proven equivalent nor
    /// separated within the word bound.
    Inconclusive {
        rival: Pattern,
    },
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Stats {
    pub patterns: usize,
    pub consistent: usize,
    pub membership_calls: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub status: Status,
    pub bounds: Bounds,
    pub stats: Stats,
}

impl Verdict {
    pub fn is_confirmed(&self) -> bool {
        self.status == Status::Confirmed
    }

    pub fn render(&self, alpha: &Alphabet) -> String {
        let mut s = String::new();
        let _ = match &self.status {
            Status::Confirmed => writeln!(s, "status: confirmed"),
            Status::Refuted { rival, separator } => {
                let _ = writeln!(s, "status: refuted");
                let _ = writeln!(s, "rival: {}", rival.render(alpha));
                match separator {
                    Some(w) => writeln!(s, "separator: {}", w.render(alpha)),
                    None => writeln!(s, "separator: none within bounds (languages provably differ)"),
                }
            }
            Status::Inconclusive { rival } => {
                let _ = writeln!(s, "status: inconclusive");
                writeln!(s, "rival: {}", rival.render(alpha))
            }
        };
        let _ = writeln!(
            s,
            "bounds: max-pattern-len {} max-word-len {}",
            self.bounds.max_pattern_len, self.bounds.max_word_len
        );
        let _ = writeln!(
            s,
            "stats: {} patterns, {} consistent, {} membership calls",
            self.stats.patterns, self.stats.consistent, self.stats.membership_calls
        );
        s
    }
}

/// Letters to draw rival constants from: the alphabet's letters, plus for
/// an unbounded alphabet every letter of the target and the sample.
pub(crate) fn rival_letters(alpha: &Alphabet, target: &Pattern, sample: Option<&Sample>) -> Vec<Letter> {
    let mut out = alpha.letters();
    if !alpha.is_finite() {
        let mut extra: Vec<Letter> = target.const_letters();
        if let Some(s) = sample {
            for (w, _) in s.iter() {
                extra.extend(w.letter_set());
            }
        }
        for l in extra {
            if !out.contains(&l) {
                out.push(l);
            }
        }
        out.sort();
    }
    out
}

/// Whether `p` agrees with every labelled example (shortest words first).
pub fn consistent(p: &Pattern, sample: &Sample, alpha: &Alphabet) -> Result<bool> {
    consistent_counted(p, sample, alpha, &AtomicUsize::new(0))
}

fn consistent_counted(p: &Pattern, sample: &Sample, alpha: &Alphabet, calls: &AtomicUsize) -> Result<bool> {
    let mut ex: Vec<_> = sample.iter().collect();
    ex.sort_by(|a, b| a.0.len().cmp(b.0.len()));
    for (w, label) in ex {
        calls.fetch_add(1, Ordering::Relaxed);
        if membership(w, p, alpha)? != *label {
            return Ok(false);
        }
    }
    Ok(true)
}

fn check_target(target: &Pattern, sample: &Sample, alpha: &Alphabet) -> Result<()> {
    for (w, label) in sample.iter() {
        if membership(w, target, alpha)? != *label {
            let sign = if *label { '+' } else { '-' };
            return Err(Error::InconsistentSample(format!("{sign} {}", w.render(alpha))));
        }
    }
    Ok(())
}

/// Whether `sample` is a teaching set for `target` among the class's
/// patterns within `bounds`.
pub fn is_teaching_set(target: &Pattern, sample: &Sample, spec: &ClassSpec, bounds: Bounds) -> Result<Verdict> {
    verify(target, sample, spec, None, bounds)
}

/// As [`is_teaching_set`], ignoring rivals `r` with `r ≺ target`.
pub fn is_pbt_set(
    target: &Pattern,
    sample: &Sample,
    spec: &ClassSpec,
    pref: &PreferenceOrder,
    bounds: Bounds,
) -> Result<Verdict> {
    verify(target, sample, spec, Some(pref), bounds)
}

enum Outcome {
    Refuted(Option<Word>),
    Unknown,
}

fn verify(
    target: &Pattern,
    sample: &Sample,
    spec: &ClassSpec,
    pref: Option<&PreferenceOrder>,
    bounds: Bounds,
) -> Result<Verdict> {
    let alpha = &spec.alphabet;
    check_target(target, sample, alpha)?;
    let letters = rival_letters(alpha, target, Some(sample));
    let rivals = enumerate_with_letters(spec, bounds.max_pattern_len, &letters)?;
    let calls = AtomicUsize::new(0);
    let consistent_count = AtomicUsize::new(0);
    let results: Vec<(usize, Outcome)> = rivals
        .par_iter()
        .enumerate()
        .map(|(i, r)| -> Result<Option<(usize, Outcome)>> {
            if !consistent_counted(r, sample, alpha, &calls)? {
                return Ok(None);
            }
            consistent_count.fetch_add(1, Ordering::Relaxed);
            if pref.is_some_and(|p| p.less(r, target)) {
                return Ok(None);
            }
            Ok(match decide_equivalence(r, target, alpha, bounds.max_word_len) {
                Equivalence::Equal => None,
                Equivalence::Different(w) => Some((i, Outcome::Refuted(w))),
                Equivalence::Unknown => Some((i, Outcome::Unknown)),
            })
        })
        .filter_map(|r| r.transpose())
        .collect::<Result<_>>()?;
    let refuted = results.iter().filter(|(_, o)| matches!(o, Outcome::Refuted(_))).min_by_key(|(i, _)| *i);
    let unknown = results.iter().filter(|(_, o)| matches!(o, Outcome::Unknown)).min_by_key(|(i, _)| *i);
    let status = match (refuted, unknown) {
        (Some((i, Outcome::Refuted(w))), _) => Status::Refuted { rival: rivals[*i].clone(), separator: w.clone() },
        (_, Some((i, _))) => Status::Inconclusive { rival: rivals[*i].clone() },
        _ => Status::Confirmed,
    };
    Ok(Verdict {
        status,
        bounds,
        stats: Stats {
            patterns: rivals.len(),
            consistent: consistent_count.into_inner(),
            membership_calls: calls.into_inner(),
        },
    })
}

/// Whether `p` and `q` agree on all words of length ≤ `max_word_len`
/// (over a finite alphabet), after exact canonical-form shortcuts.
pub fn equivalent_bounded(p: &Pattern, q: &Pattern, alpha: &Alphabet, max_word_len: usize) -> bool {
    if p.normalize() == q.normalize() || canonical_form(alpha, p) == canonical_form(alpha, q) {
        return true;
    }
    if let (Some(a), Some(b)) = (sbr_canonicalize(p), sbr_canonicalize(q)) {
        return a.skeleton() == b.skeleton();
    }
    if let (Some(a), Some(b)) = (noncross_exponents(p), noncross_exponents(q)) {
        if a.contains(&1) && b.contains(&1) {
            return true;
        }
    }
    let consts: Vec<Letter> = p.const_set().union(&q.const_set()).copied().collect();
    let letters = crate::verifier::equiv::working_letters(alpha, &consts, 2);
    bounded_disagreement(p, q, &letters, max_word_len).is_none()
}
