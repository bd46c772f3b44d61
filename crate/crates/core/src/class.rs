//! Pattern classes and structural predicates.

use std::fmt;

use crate::alphabet::Alphabet;
use crate::error::{pre, Result};
use crate::pattern::{Pattern, Sym};

/// Structural facts about a pattern.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    /// Every variable occurs at most once.
    pub regular: bool,
    /// Maximum variable frequency (0 for constant patterns).
    pub max_freq: usize,
    /// `Some(m)` if every variable occurs exactly `m ≥ 1` times.
    pub quasi_regular: Option<usize>,
    /// Constant-free with each variable's occurrences contiguous.
    pub non_cross: bool,
    pub constant_free: bool,
    pub constant: bool,
    pub simple_block_regular: bool,
}

pub fn classify(p: &Pattern) -> Classification {
    let freqs = p.var_freqs();
    let max_freq = freqs.values().copied().max().unwrap_or(0);
    let quasi_regular = match freqs.values().next() {
        Some(&f) if freqs.values().all(|&g| g == f) => Some(f),
        _ => None,
    };
    Classification {
        regular: max_freq <= 1,
        max_freq,
        quasi_regular,
        non_cross: noncross_exponents(p).is_some(),
        constant_free: p.is_constant_free(),
        constant: p.is_constant(),
        simple_block_regular: sbr_canonicalize(p).is_some(),
    }
}

/// For a non-cross pattern `y1^n1 … yk^nk` (distinct variables), the
/// exponents `[n1, …, nk]`.
pub fn noncross_exponents(p: &Pattern) -> Option<Vec<u32>> {
    let mut out: Vec<u32> = Vec::new();
    let mut seen = Vec::new();
    let mut prev = None;
    for s in p.syms() {
        let Sym::Var(v) = *s else { return None };
        if prev == Some(v) {
            *out.last_mut().unwrap() += 1;
            continue;
        }
        if seen.contains(&v) {
            return None;
        }
        seen.push(v);
        out.push(1);
        prev = Some(v);
    }
    Some(out)
}

/// If `p` is simple block-regular (`X1 a1 X2 … a(n−1) Xn`, nonempty
/// variable blocks, single-letter separators, each block containing a variable
/// that occurs nowhere else in `p`), returns `x1 a1 x2 … a(n−1) xn`.
pub fn sbr_canonicalize(p: &Pattern) -> Option<Pattern> {
    let mut blocks: Vec<Vec<u32>> = vec![Vec::new()];
    let mut skel = Vec::new();
    for s in p.syms() {
        match *s {
            Sym::Var(v) => blocks.last_mut().unwrap().push(v),
            Sym::Const(a) => {
                if blocks.last().unwrap().is_empty() {
                    return None;
                }
                skel.push(a);
                blocks.push(Vec::new());
            }
        }
    }
    if blocks.last().unwrap().is_empty() {
        return None;
    }
    let freqs = p.var_freqs();
    if !blocks.iter().all(|b| b.iter().any(|v| freqs[v] == 1)) {
        return None;
    }
    Some(Pattern::sbr_from_skeleton(&skel))
}

/// Applies the binary normalization `x δ x′ δ̄ x″ → x δ δ̄ x″` to a
/// fixpoint (always deleting at the leftmost match), then renames variables.
pub fn binary_regular_normalize(p: &Pattern, alpha: &Alphabet) -> Result<Pattern> {
    if alpha.size() != Some(2) {
        return Err(pre("binary normalization needs a two-letter alphabet"));
    }
    if p.max_freq() > 1 {
        return Err(pre("binary normalization needs a regular pattern"));
    }
    let mut syms = p.syms().to_vec();
    'outer: loop {
        for i in 0..syms.len().saturating_sub(4) {
            if let [Sym::Var(_), Sym::Const(d), Sym::Var(_), Sym::Const(e), Sym::Var(_)] = syms[i..i + 5] {
                if alpha.complement(d) == Some(e) {
                    syms.remove(i + 2);
                    continue 'outer;
                }
            }
        }
        break;
    }
    Ok(Pattern::new(syms)?.normalize())
}

/// A pattern family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    AllPatterns,
    Regular,
    /// Every variable occurs at most `m` times.
    MRegular(usize),
    /// Every variable occurs exactly `m` times (constant patterns included).
    MQuasiRegular(usize),
    /// Non-cross patterns with frequencies at most `m`.
    NonCross(usize),
    SimpleBlockRegular,
    /// At most `k` variables, each occurring at most `m` times.
    KVarMRegular(usize, usize),
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::AllPatterns => write!(f, "all patterns"),
            Family::Regular => write!(f, "regular"),
            Family::MRegular(m) => write!(f, "{m}-regular"),
            Family::MQuasiRegular(m) => write!(f, "{m}-quasi-regular"),
            Family::NonCross(m) => write!(f, "non-cross (m = {m})"),
            Family::SimpleBlockRegular => write!(f, "simple block-regular"),
            Family::KVarMRegular(k, m) => write!(f, "{k}-variable {m}-regular"),
        }
    }
}

/// A pattern class over an alphabet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassSpec {
    pub family: Family,
    pub alphabet: Alphabet,
    pub constant_free: bool,
}

impl ClassSpec {
    pub fn new(family: Family, alphabet: Alphabet) -> Result<Self> {
        match family {
            Family::MRegular(0) | Family::MQuasiRegular(0) | Family::NonCross(0) | Family::KVarMRegular(_, 0) => {
                Err(pre("m must be at least 1"))
            }
            _ => Ok(ClassSpec { family, alphabet, constant_free: false }),
        }
    }

    pub fn constant_free(mut self) -> Self {
        self.constant_free = true;
        self
    }

    /// Whether `p` belongs to the class.
    pub fn contains(&self, p: &Pattern) -> bool {
        if p.const_letters().iter().any(|&l| !self.alphabet.contains(l)) {
            return false;
        }
        if self.constant_free && !p.is_constant_free() {
            return false;
        }
        let freqs = p.var_freqs();
        let max = freqs.values().copied().max().unwrap_or(0);
        match self.family {
            Family::AllPatterns => true,
            Family::Regular => max <= 1,
            Family::MRegular(m) => max <= m,
            Family::MQuasiRegular(m) => freqs.values().all(|&f| f == m),
            Family::NonCross(m) => max <= m && noncross_exponents(p).is_some(),
            Family::SimpleBlockRegular => sbr_canonicalize(p).is_some(),
            Family::KVarMRegular(k, m) => freqs.len() <= k && max <= m,
        }
    }
}

impl fmt::Display for ClassSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{} over {}", self.family, if self.constant_free { ", constant-free" } else { "" }, self.alphabet)
    }
}
