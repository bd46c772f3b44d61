//! Quasi-regular patterns: every variable occurs exactly `m` times.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use super::{unary_word, validate};
use crate::alphabet::{Alphabet, Letter};
use crate::class::classify;
use crate::error::{pre, Error, Result};
use crate::pattern::{Pattern, Sym};
use crate::sample::Sample;
use crate::verifier::unary_canonical;
use crate::word::Word;

/// `(k, g)` for a unary pattern equivalent to `0^k x^g`, `(k, 0)` for `0^k`.
fn unary_shape(p: &Pattern, alpha: &Alphabet) -> Result<(usize, usize)> {
    if alpha.size() != Some(1) {
        return Err(pre("needs a one-letter alphabet"));
    }
    let c = unary_canonical(p);
    let k = c.const_letters().len();
    let freqs: Vec<usize> = c.var_freqs().into_values().collect();
    match freqs[..] {
        [] => Ok((k, 0)),
        [g] => Ok((k, g)),
        _ => Err(pre("expected a pattern of the form 0^k x^m or 0^k")),
    }
}

/// Teaching set for `0^k x^m` (or the constant `0^k`) among unary
/// `m`-quasi-regular patterns.
pub fn qr_unary_set(p: &Pattern, m: usize, alpha: &Alphabet) -> Result<Sample> {
    let (k, g) = unary_shape(p, alpha)?;
    let mut s = Sample::new();
    s.pos(unary_word(k))?;
    match g {
        0 => s.neg(unary_word(k + m))?,
        g if g != m => return Err(pre(format!("variable occurs {g} times, expected {m}"))),
        _ => {
            s.pos(unary_word(k + m))?;
            if k >= m {
                s.neg(unary_word(k - m))?;
            }
        }
    }
    validate(p, &s, alpha)?;
    Ok(s)
}

/// Preference-based teaching set for `0^k x^m` / `0^k`, to be used with
/// [`pref_qr_unary`](crate::verifier::pref_qr_unary).
pub fn qr_unary_pbt_set(p: &Pattern, alpha: &Alphabet) -> Result<Sample> {
    let (k, g) = unary_shape(p, alpha)?;
    let mut s = Sample::new();
    s.pos(unary_word(k))?;
    if g > 0 {
        s.pos(unary_word(k + g))?;
    }
    validate(p, &s, alpha)?;
    Ok(s)
}

/// The adjacency graph of a constant-free pattern, with left and right
/// copies of each variable contracted, and a distance-2 colouring of it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColouredAdjacency {
    /// Variables in order of first occurrence.
    pub vertices: Vec<u32>,
    /// Ordered pairs `(a, b)` such that `a b` is a factor of the pattern.
    pub edges: BTreeSet<(u32, u32)>,
    /// Colours start at 1.
    pub colouring: BTreeMap<u32, usize>,
    /// The smallest colour different from the vertex's own.
    pub xi: BTreeMap<u32, usize>,
    /// Strictly increasing heights, all above 2.
    pub p: BTreeMap<u32, usize>,
}

impl ColouredAdjacency {
    pub fn build(pat: &Pattern) -> Self {
        let vertices = pat.vars();
        let edges: BTreeSet<(u32, u32)> = pat
            .syms()
            .windows(2)
            .filter_map(|w| match (w[0], w[1]) {
                (Sym::Var(a), Sym::Var(b)) => Some((a, b)),
                _ => None,
            })
            .collect();
        let mut adj: HashMap<u32, BTreeSet<u32>> = HashMap::new();
        for &(a, b) in &edges {
            if a != b {
                adj.entry(a).or_default().insert(b);
                adj.entry(b).or_default().insert(a);
            }
        }
        let empty = BTreeSet::new();
        let near = |v: u32| adj.get(&v).unwrap_or(&empty);
        let mut colouring = BTreeMap::new();
        for &v in &vertices {
            let mut used: BTreeSet<usize> = BTreeSet::new();
            for &u in near(v) {
                used.extend(colouring.get(&u));
                for &w in near(u) {
                    if w != v {
                        used.extend(colouring.get(&w));
                    }
                }
            }
            let c = (1..).find(|c| !used.contains(c)).expect("unbounded");
            colouring.insert(v, c);
        }
        let xi = colouring.iter().map(|(&v, &c)| (v, if c == 1 { 2 } else { 1 })).collect();
        let p = vertices.iter().enumerate().map(|(i, &v)| (v, i + 3)).collect();
        ColouredAdjacency { vertices, edges, colouring, xi, p }
    }

    pub fn colours(&self) -> usize {
        self.colouring.values().copied().max().unwrap_or(0)
    }

    /// For every variable `v`, the variables directly left of an occurrence
    /// of `v` have pairwise distinct colours, and so do those directly right.
    pub fn conditions_hold(&self) -> bool {
        let distinct = |vs: Vec<u32>| {
            let cs: BTreeSet<usize> = vs.iter().map(|v| self.colouring[v]).collect();
            cs.len() == vs.len()
        };
        self.vertices.iter().all(|&v| {
            let left = self.edges.iter().filter(|e| e.1 == v).map(|e| e.0).collect();
            let right = self.edges.iter().filter(|e| e.0 == v).map(|e| e.1).collect();
            distinct(left) && distinct(right)
        })
    }
}

/// The single positive example `φ(p)` with
/// `φ(x) = a_c a_ξ^p a_c` (colour `c`, alternate colour `ξ`, height `p`
/// from the colouring), for the preference that favours shorter patterns.
pub fn qr_pbt_witness(p: &Pattern, alpha: &Alphabet) -> Result<(Word, ColouredAdjacency)> {
    let cls = classify(p);
    let Some(m) = cls.quasi_regular.filter(|_| cls.constant_free) else {
        return Err(pre("needs a constant-free quasi-regular pattern"));
    };
    let g = ColouredAdjacency::build(p);
    let needed = g.colours().max(2);
    if alpha.size().is_some_and(|s| s < needed) {
        return Err(pre(format!("the colouring needs {needed} letters")));
    }
    if !g.conditions_hold() || g.colours() > 4 * m * m + 1 {
        return Err(Error::Construction("colouring violates its invariants".into()));
    }
    let letter = |c: usize| Letter(c as u32 - 1);
    let images: HashMap<u32, Word> = g
        .vertices
        .iter()
        .map(|v| {
            let (c, x) = (letter(g.colouring[v]), letter(g.xi[v]));
            let mut w = Word::letter(c);
            w.push_run(x, g.p[v].into());
            w.push_run(c, 1u32.into());
            (*v, w)
        })
        .collect();
    let w = p.substitute(&images);
    let mut s = Sample::new();
    s.pos(w.clone())?;
    validate(p, &s, alpha)?;
    Ok((w, g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::parse_pattern;
    use crate::sample::parse_sample;
    use crate::word::parse_word;

    #[test]
    fn unary_sets() {
        let u = Alphabet::unary();
        let p = |s: &str| parse_pattern(s, &u).unwrap();
        let s = |t: &str| parse_sample(t, &u).unwrap();
        assert_eq!(qr_unary_set(&p("00 x1^2"), 2, &u).unwrap(), s("+ 00\n+ 0000\n- eps\n"));
        assert_eq!(qr_unary_set(&p("0 x1^3"), 3, &u).unwrap(), s("+ 0\n+ 0000\n"));
        assert_eq!(qr_unary_set(&p("00"), 2, &u).unwrap(), s("+ 00\n- 0000\n"));
        assert!(qr_unary_set(&p("0 x1^2"), 3, &u).is_err());
        assert_eq!(qr_unary_pbt_set(&p("00"), &u).unwrap(), s("+ 00\n"));
        assert_eq!(qr_unary_pbt_set(&p("0 x1^2"), &u).unwrap(), s("+ 0\n+ 000\n"));
        assert_eq!(qr_unary_pbt_set(&p("x1^3"), &u).unwrap(), s("+ eps\n+ 000\n"));
    }

    #[test]
    fn witnesses() {
        let a = Alphabet::binary();
        let (w, g) = qr_pbt_witness(&parse_pattern("x1 x2 x1 x2", &a).unwrap(), &a).unwrap();
        assert_eq!(w, parse_word("01110 100001 01110 100001", &a).unwrap());
        assert_eq!(g.colouring.values().copied().collect::<Vec<_>>(), vec![1, 2]);
        let (w, g) = qr_pbt_witness(&parse_pattern("x1 x1", &a).unwrap(), &a).unwrap();
        assert_eq!(w, parse_word("01110 01110", &a).unwrap());
        assert_eq!(g.colours(), 1);
        let p = parse_pattern("x1 x2 x3 x1 x3 x2", &a).unwrap();
        assert!(qr_pbt_witness(&p, &a).is_err());
        let (_, g) = qr_pbt_witness(&p, &Alphabet::ternary()).unwrap();
        assert!(g.conditions_hold() && g.colours() == 3);
    }
}
