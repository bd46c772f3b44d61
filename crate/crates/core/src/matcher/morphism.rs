//! Constant-preserving morphisms between patterns.

use std::collections::BTreeMap;

use super::general::{solve, PSym};
use crate::pattern::{Pattern, Sym};

/// Images of the source variables as symbol strings.
pub type Morphism = BTreeMap<u32, Vec<Sym>>;

/// A constant-preserving morphism `g` with `g(source) = target`, if any.
/// Its existence implies `L(target) ⊆ L(source)`.
pub fn pattern_morphism(source: &Pattern, target: &Pattern) -> Option<Morphism> {
    let vars = source.vars();
    let syms: Vec<PSym<Sym>> = source
        .syms()
        .iter()
        .map(|s| match *s {
            Sym::Var(v) => PSym::Var(vars.iter().position(|&u| u == v).unwrap()),
            c => PSym::Const(c),
        })
        .collect();
    let bind = solve(&syms, target.syms(), vars.len())?;
    Some(vars.iter().zip(bind).map(|(&v, r)| (v, target.syms()[r.unwrap()].to_vec())).collect())
}

/// `g(p)` as a symbol string (possibly empty).
pub fn apply_morphism(p: &Pattern, g: &Morphism) -> Vec<Sym> {
    let mut out = Vec::new();
    for s in p.syms() {
        match s {
            Sym::Var(v) => out.extend(g.get(v).into_iter().flatten().copied()),
            c => out.push(*c),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;
    use crate::pattern::parse_pattern;

    fn p(s: &str) -> Pattern {
        parse_pattern(s, &Alphabet::binary()).unwrap()
    }

    #[test]
    fn examples() {
        assert!(pattern_morphism(&p("x1^2 x2^2 x3^2"), &p("x1^2 x2^2 x3^2 x4^2")).is_none());
        let t = p("x3 0 x1 x3 1");
        let g = pattern_morphism(&p("x1 x2"), &t).unwrap();
        assert_eq!(apply_morphism(&p("x1 x2"), &g), t.syms());
        let g = pattern_morphism(&p("x1 0 x2"), &p("0")).unwrap();
        assert!(g.values().all(Vec::is_empty));
        assert!(pattern_morphism(&p("x1 1"), &p("x1 0")).is_none());
    }
}
