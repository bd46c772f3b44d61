//! Membership in erasing pattern languages.
//!
//! [`membership`] dispatches to the cheapest exact decider that applies:
//! a numerical-semigroup test when only one letter is involved, the
//! staircase decider for non-cross patterns on staircase words, and the
//! backtracking search otherwise.

pub mod general;
mod morphism;
mod shuffle;
mod staircase;
mod unary;

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::ops::Range;

use crate::alphabet::{Alphabet, Letter};
use crate::class::noncross_exponents;
use crate::error::Result;
use crate::pattern::{Pattern, Sym};
use crate::word::{Word, DEFAULT_MATERIALIZE_CAP};

pub use general::{solve, PSym};
pub use morphism::{apply_morphism, pattern_morphism, Morphism};
pub use shuffle::shuffle_member;
pub use staircase::{noncross_staircase_membership, staircase_decompose, staircase_word, StaircaseForm};
pub use unary::unary_membership;

/// A substitution witnessing `h(π) = w`, with the interval of `w` generated
/// by each pattern position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub assignment: BTreeMap<u32, Word>,
    /// 0-based half-open ranges, one per pattern position.
    pub intervals: Vec<Range<usize>>,
}

impl Witness {
    /// Builds the interval map for a given substitution (missing variables
    /// map to ε). Does not check that it produces any particular word.
    pub fn from_assignment(p: &Pattern, assignment: BTreeMap<u32, Word>) -> Witness {
        let mut intervals = Vec::with_capacity(p.len());
        let mut pos = 0;
        for s in p.syms() {
            let len = match s {
                Sym::Const(_) => 1,
                Sym::Var(v) => assignment.get(v).and_then(Word::len_usize).unwrap_or(0),
            };
            intervals.push(pos..pos + len);
            pos += len;
        }
        Witness { assignment, intervals }
    }

    /// Cut-points (1-based): right ends of `I(q)` where `I(q)` and `I(q+1)`
    /// are both nonempty.
    pub fn cut_points(&self) -> Vec<usize> {
        let mut out: Vec<usize> =
            self.intervals.windows(2).filter(|w| !w[0].is_empty() && !w[1].is_empty()).map(|w| w[0].end).collect();
        out.dedup();
        out
    }

    pub fn render(&self, p: &Pattern, alpha: &Alphabet) -> String {
        let mut s = String::new();
        for (v, w) in &self.assignment {
            let _ = writeln!(s, "x{v} -> {}", w.render(alpha));
        }
        for (i, (sym, r)) in p.syms().iter().zip(&self.intervals).enumerate() {
            let name = match sym {
                Sym::Var(v) => format!("x{v}"),
                Sym::Const(l) => alpha.name(*l),
            };
            if r.is_empty() {
                let _ = writeln!(s, "{:>3} {name}: empty", i + 1);
            } else {
                let _ = writeln!(s, "{:>3} {name}: [{}, {}]", i + 1, r.start + 1, r.end);
            }
        }
        s
    }
}

fn dense(p: &Pattern) -> (Vec<PSym<Letter>>, Vec<u32>) {
    let vars = p.vars();
    let idx: HashMap<u32, usize> = vars.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let syms = p
        .syms()
        .iter()
        .map(|s| match *s {
            Sym::Var(v) => PSym::Var(idx[&v]),
            Sym::Const(l) => PSym::Const(l),
        })
        .collect();
    (syms, vars)
}

/// Leftmost-greedy matching for patterns whose variables occur once.
fn regular_member(w: &[Letter], p: &Pattern) -> bool {
    let mut segs: Vec<Vec<Letter>> = vec![Vec::new()];
    let mut prev_var = false;
    for s in p.syms() {
        match *s {
            Sym::Const(l) => {
                segs.last_mut().unwrap().push(l);
                prev_var = false;
            }
            Sym::Var(_) if !prev_var => {
                segs.push(Vec::new());
                prev_var = true;
            }
            Sym::Var(_) => {}
        }
    }
    if segs.len() == 1 {
        return w == segs[0].as_slice();
    }
    let (first, last) = (&segs[0], &segs[segs.len() - 1]);
    if first.len() + last.len() > w.len() || !w.starts_with(first) || !w.ends_with(last) {
        return false;
    }
    let mut i = first.len();
    let end = w.len() - last.len();
    for seg in &segs[1..segs.len() - 1] {
        match w[i..end].windows(seg.len()).position(|x| x == seg.as_slice()) {
            Some(k) => i += k + seg.len(),
            None => return false,
        }
    }
    true
}

/// Membership of explicit letters, without dispatch to the symbolic deciders.
pub fn member_letters(w: &[Letter], p: &Pattern) -> bool {
    if p.max_freq() <= 1 {
        return regular_member(w, p);
    }
    let (syms, vars) = dense(p);
    solve(&syms, w, vars.len()).is_some()
}

/// Whether `w ∈ L(p)`. Words too long to materialize are decided only when
/// a symbolic decider applies.
pub fn membership(w: &Word, p: &Pattern, _alpha: &Alphabet) -> Result<bool> {
    membership_with_cap(w, p, DEFAULT_MATERIALIZE_CAP)
}

/// [`membership`] with an explicit materialization cap.
pub fn membership_with_cap(w: &Word, p: &Pattern, cap: usize) -> Result<bool> {
    let mut letters = w.letter_set();
    letters.extend(p.const_set());
    if letters.len() <= 1 {
        return Ok(unary_membership(w.len(), p));
    }
    if let Some(exps) = noncross_exponents(p) {
        if let Some(s) = staircase_decompose(w) {
            return Ok(noncross_staircase_membership(&s, &exps));
        }
    }
    let explicit = w.to_letters(cap)?;
    Ok(member_letters(&explicit, p))
}

/// The first witness in search order, or `None` if `w ∉ L(p)`.
pub fn match_witness(w: &Word, p: &Pattern) -> Result<Option<Witness>> {
    let explicit = w.to_letters(DEFAULT_MATERIALIZE_CAP)?;
    Ok(witness_letters(&explicit, p))
}

pub fn witness_letters(w: &[Letter], p: &Pattern) -> Option<Witness> {
    let (syms, vars) = dense(p);
    let bind = solve(&syms, w, vars.len())?;
    let assignment =
        vars.iter().zip(bind).map(|(&v, r)| (v, Word::from_letters(&w[r.expect("every variable is bound")]))).collect();
    Some(Witness::from_assignment(p, assignment))
}
