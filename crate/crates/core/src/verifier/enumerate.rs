//! Bounded enumeration of pattern classes, one representative per
//! canonical form.

use std::collections::HashSet;

use crate::alphabet::{Alphabet, Letter};
use crate::class::{binary_regular_normalize, noncross_exponents, ClassSpec, Family};
use crate::error::Result;
use crate::numtheory::coin_representable;
use crate::pattern::{Pattern, Sym};

/// All patterns of the class up to `max_len` symbols over the spec's
/// letters (seeds, for an unbounded alphabet). For simple block-regular
/// classes `max_len` bounds the skeleton length instead.
pub fn enumerate_patterns(spec: &ClassSpec, max_len: usize) -> Result<Vec<Pattern>> {
    enumerate_with_letters(spec, max_len, &spec.alphabet.letters())
}

/// As [`enumerate_patterns`], with constants drawn from `letters`.
pub fn enumerate_with_letters(spec: &ClassSpec, max_len: usize, letters: &[Letter]) -> Result<Vec<Pattern>> {
    let letters: &[Letter] = if spec.constant_free { &[] } else { letters };
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut keep = |p: Pattern| {
        let mut c = canonical_form(&spec.alphabet, &p);
        if !spec.contains(&c) {
            c = p.normalize();
        }
        if spec.contains(&c) && seen.insert(c.clone()) {
            out.push(c);
        }
    };
    match spec.family {
        Family::SimpleBlockRegular => {
            let mut skel = Vec::new();
            skeletons(letters, max_len, &mut skel, &mut |s| keep(Pattern::sbr_from_skeleton(s)));
        }
        Family::NonCross(m) => {
            keep(Pattern::noncross(&[1])?);
            let mut exps = Vec::new();
            exponent_vectors(2, m as u32, max_len as u32, &mut exps, &mut |e| {
                keep(Pattern::noncross(e).expect("nonempty"))
            });
        }
        family => {
            let (cap, kcap, merged) = match family {
                Family::Regular => (1, usize::MAX, true),
                Family::MRegular(m) | Family::MQuasiRegular(m) => (m, usize::MAX, false),
                Family::KVarMRegular(k, m) => (m, k, false),
                _ => (usize::MAX, usize::MAX, false),
            };
            let mut g = Gen { letters, max_len, cap, kcap, merged, syms: Vec::new(), freq: Vec::new() };
            g.run(&mut |syms| {
                if let Ok(p) = Pattern::new(syms.to_vec()) {
                    keep(p)
                }
            });
        }
    }
    Ok(out)
}

fn skeletons(letters: &[Letter], max_len: usize, cur: &mut Vec<Letter>, f: &mut dyn FnMut(&[Letter])) {
    f(cur);
    if cur.len() == max_len {
        return;
    }
    for &l in letters {
        cur.push(l);
        skeletons(letters, max_len, cur, f);
        cur.pop();
    }
}

fn exponent_vectors(lo: u32, hi: u32, budget: u32, cur: &mut Vec<u32>, f: &mut dyn FnMut(&[u32])) {
    for e in lo..=hi.min(budget) {
        cur.push(e);
        f(cur);
        exponent_vectors(lo, hi, budget - e, cur, f);
        cur.pop();
    }
}

/// Restricted-growth generation: normalized patterns only.
struct Gen<'a> {
    letters: &'a [Letter],
    max_len: usize,
    cap: usize,
    kcap: usize,
    /// Skip adjacent variables (regular patterns merge them anyway).
    merged: bool,
    syms: Vec<Sym>,
    freq: Vec<usize>,
}

impl Gen<'_> {
    fn run(&mut self, f: &mut dyn FnMut(&[Sym])) {
        if !self.syms.is_empty() {
            f(&self.syms);
        }
        if self.syms.len() == self.max_len {
            return;
        }
        for &l in self.letters {
            self.syms.push(Sym::Const(l));
            self.run(f);
            self.syms.pop();
        }
        if self.merged && matches!(self.syms.last(), Some(Sym::Var(_))) {
            return;
        }
        let nvars = self.freq.len();
        for v in 0..=nvars {
            if v == nvars && nvars == self.kcap {
                break;
            }
            if v < nvars && self.freq[v] >= self.cap {
                continue;
            }
            if v == nvars {
                self.freq.push(0);
            }
            self.freq[v] += 1;
            self.syms.push(Sym::Var(v as u32 + 1));
            self.run(f);
            self.syms.pop();
            self.freq[v] -= 1;
            if v == nvars {
                self.freq.pop();
            }
        }
    }
}

/// A representative of `p`'s language used to deduplicate enumerations:
/// unary patterns become `0^k x1^g1 x2^g2 …` over minimal generators,
/// regular patterns merge adjacent variables (and, over two letters, apply
/// the deletion normal form), non-cross patterns with a frequency-1
/// variable collapse to `x1`; everything else is just normalized.
pub fn canonical_form(alpha: &Alphabet, p: &Pattern) -> Pattern {
    if alpha.size() == Some(1) {
        return unary_canonical(p);
    }
    if p.max_freq() <= 1 {
        let merged = merge_adjacent_vars(p);
        if alpha.size() == Some(2) && !p.is_constant() {
            if let Ok(q) = binary_regular_normalize(&merged, alpha) {
                return q;
            }
        }
        return merged;
    }
    if let Some(exps) = noncross_exponents(p) {
        if exps.contains(&1) {
            return Pattern::noncross(&[1]).expect("nonempty");
        }
    }
    p.normalize()
}

fn merge_adjacent_vars(p: &Pattern) -> Pattern {
    let mut syms: Vec<Sym> = Vec::new();
    for &s in p.syms() {
        if s.is_var() && matches!(syms.last(), Some(Sym::Var(_))) {
            continue;
        }
        syms.push(s);
    }
    Pattern::new(syms).expect("nonempty").normalize()
}

/// `0^k x1^g1 … xr^gr` with `g1 < … < gr` the minimal generators of the
/// semigroup spanned by the variable frequencies.
pub fn unary_canonical(p: &Pattern) -> Pattern {
    let consts = p.const_letters();
    let mut freqs: Vec<u64> = p.var_freqs().values().map(|&f| f as u64).collect();
    freqs.sort_unstable();
    freqs.dedup();
    let mut gens: Vec<u64> = Vec::new();
    for f in freqs {
        if !coin_representable(&f.into(), &gens) {
            gens.push(f);
        }
    }
    let mut syms: Vec<Sym> = consts.into_iter().map(Sym::Const).collect();
    for (i, &g) in gens.iter().enumerate() {
        syms.extend(std::iter::repeat_n(Sym::Var(i as u32 + 1), g as usize));
    }
    Pattern::new(syms).expect("nonempty")
}
