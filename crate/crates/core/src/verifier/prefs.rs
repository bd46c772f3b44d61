//! Preference orders for preference-based teaching.
//!
//! `less(a, b)` means `a ≺ b`: the learner prefers `b` to `a`. A rival `r`
//! with `r ≺ target` is ignored when checking a preference-based set.

use std::fmt;
use std::sync::Arc;

use crate::alphabet::Alphabet;
use crate::class::noncross_exponents;
use crate::pattern::{Pattern, Sym};
use crate::verifier::equiv::{decide_equivalence, inclusion, Equivalence};

type Less = dyn Fn(&Pattern, &Pattern) -> bool + Send + Sync;

/// A named strict partial order on patterns.
#[derive(Clone)]
pub struct PreferenceOrder {
    pub name: String,
    less: Arc<Less>,
}

impl PreferenceOrder {
    pub fn new(name: impl Into<String>, less: impl Fn(&Pattern, &Pattern) -> bool + Send + Sync + 'static) -> Self {
        PreferenceOrder { name: name.into(), less: Arc::new(less) }
    }

    /// `a ≺ b`.
    pub fn less(&self, a: &Pattern, b: &Pattern) -> bool {
        (self.less)(a, b)
    }
}

impl fmt::Debug for PreferenceOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PreferenceOrder({})", self.name)
    }
}

fn skel_len(p: &Pattern) -> usize {
    p.const_letters().len()
}

/// Simple block-regular patterns: longer skeleton preferred.
pub fn pref_sr() -> PreferenceOrder {
    PreferenceOrder::new("sr", |a, b| skel_len(a) < skel_len(b))
}

/// Unary quasi-regular patterns `0^k x^m` / `0^k`: constant patterns are
/// preferred to all others; among the rest a longer skeleton is preferred.
pub fn pref_qr_unary() -> PreferenceOrder {
    PreferenceOrder::new("qr-unary", |a, b| {
        (b.is_constant() && !a.is_constant()) || (!a.is_constant() && !b.is_constant() && skel_len(a) < skel_len(b))
    })
}

/// Length of `p` after greedily deleting variables whose removal keeps the
/// language (so `x1 x2 x1 x2` counts as `x1 x1`).
pub fn reduced_len(p: &Pattern, alpha: &Alphabet) -> usize {
    let mut cur = p.normalize();
    'outer: loop {
        for v in cur.vars() {
            let syms: Vec<Sym> = cur.syms().iter().copied().filter(|&s| s != Sym::Var(v)).collect();
            let Ok(q) = Pattern::new(syms) else { continue };
            if decide_equivalence(&q, &cur, alpha, 0) == Equivalence::Equal {
                cur = q.normalize();
                continue 'outer;
            }
        }
        return cur.len();
    }
}

/// Shorter patterns preferred, comparing lengths after removing redundant
/// variables.
pub fn pref_shorter(alpha: Alphabet) -> PreferenceOrder {
    PreferenceOrder::new("shorter", move |a, b| reduced_len(b, &alpha) < reduced_len(a, &alpha))
}

fn noncross_form(p: &Pattern) -> Option<Vec<u32>> {
    let e = noncross_exponents(p)?;
    Some(if e.contains(&1) { vec![1] } else { e })
}

/// Non-cross patterns, by priority: anything not equivalent to `x1` beats
/// `x1`; then fewer variables win; finally a strictly smaller language wins.
pub fn pref_noncross(alpha: Alphabet) -> PreferenceOrder {
    PreferenceOrder::new("noncross", move |a, b| {
        let (Some(ea), Some(eb)) = (noncross_form(a), noncross_form(b)) else { return false };
        let (xa, xb) = (ea == [1], eb == [1]);
        if xa != xb {
            return xa;
        }
        if xa {
            return false;
        }
        // Applied to every pattern not equivalent to `x1`, not only to those
        // with two or more variables: restricted to the latter the three
        // rules are not transitive (x1²x2²x3² ≺ x1²x2³ ≺ x1³).
        if ea.len() != eb.len() {
            return eb.len() < ea.len();
        }
        strictly_smaller(b, a, &alpha)
    })
}

/// `L(b) ⊂ L(a)`, where decidable.
fn strictly_smaller(b: &Pattern, a: &Pattern, alpha: &Alphabet) -> bool {
    inclusion(b, a, alpha) == Some(true) && inclusion(a, b, alpha) == Some(false)
}

/// Arbitrary patterns over an unbounded alphabet: longer skeleton first,
/// then a strictly smaller language.
pub fn pref_infinite(alpha: Alphabet) -> PreferenceOrder {
    PreferenceOrder::new("infinite", move |a, b| {
        let (la, lb) = (skel_len(a), skel_len(b));
        la < lb || (la == lb && strictly_smaller(b, a, &alpha))
    })
}

/// Looks a preference order up by its CLI name.
pub fn preference_by_name(name: &str, alpha: &Alphabet) -> Option<PreferenceOrder> {
    Some(match name {
        "sr" => pref_sr(),
        "qr-unary" => pref_qr_unary(),
        "shorter" => pref_shorter(alpha.clone()),
        "noncross" => pref_noncross(alpha.clone()),
        "infinite" => pref_infinite(alpha.clone()),
        _ => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::class::{ClassSpec, Family};
    use crate::pattern::parse_pattern;
    use crate::verifier::enumerate::enumerate_patterns;

    fn check_strict_order(pref: &PreferenceOrder, pats: &[Pattern]) {
        for a in pats {
            assert!(!pref.less(a, a));
            for b in pats {
                if pref.less(a, b) {
                    assert!(!pref.less(b, a), "{a:?} {b:?}");
                    for c in pats {
                        if pref.less(b, c) {
                            assert!(pref.less(a, c), "{a:?} {b:?} {c:?}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn orders_are_strict() {
        let bin = Alphabet::binary();
        let sbr = enumerate_patterns(&ClassSpec::new(Family::SimpleBlockRegular, bin.clone()).unwrap(), 3).unwrap();
        check_strict_order(&pref_sr(), &sbr);
        let nc = enumerate_patterns(&ClassSpec::new(Family::NonCross(3), bin.clone()).unwrap(), 6).unwrap();
        check_strict_order(&pref_noncross(bin.clone()), &nc);
        let qr = enumerate_patterns(&ClassSpec::new(Family::MQuasiRegular(2), bin.clone()).unwrap().constant_free(), 6)
            .unwrap();
        check_strict_order(&pref_shorter(bin.clone()), &qr);
        let un = Alphabet::unary();
        let qru = enumerate_patterns(&ClassSpec::new(Family::MQuasiRegular(2), un).unwrap(), 6).unwrap();
        check_strict_order(&pref_qr_unary(), &qru);
    }

    #[test]
    fn reduced_lengths() {
        let a = Alphabet::binary();
        assert_eq!(reduced_len(&parse_pattern("x1 x2 x1 x2", &a).unwrap(), &a), 2);
        assert_eq!(reduced_len(&parse_pattern("x1 x2 x2 x1", &a).unwrap(), &a), 4);
        assert_eq!(reduced_len(&parse_pattern("x1 0 x2 x1", &a).unwrap(), &a), 4);
    }
}
