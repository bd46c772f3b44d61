//! Exact minimum teaching sets over a bounded word pool.
//!
//! Every rival that disagrees with the target somewhere in the pool must
//! be hit by a chosen word on which they disagree; the minimum hitting set
//! is found by iterative deepening with branching on the rival that has
//! the fewest hitting words, and the lexicographically least optimum (in
//! pool order: shortest first, then lexicographic) is reported.

use rayon::prelude::*;

use crate::alphabet::Letter;
use crate::class::ClassSpec;
use crate::error::{pre, Error, Result};
use crate::matcher::member_letters;
use crate::pattern::Pattern;
use crate::sample::Sample;
use crate::verifier::check::{rival_letters, Bounds};
use crate::verifier::enumerate::enumerate_with_letters;
use crate::verifier::equiv::{decide_equivalence, words_of_len, working_letters, Equivalence};
use crate::verifier::prefs::PreferenceOrder;
use crate::word::Word;

/// Default limit on search-tree nodes.
pub const DEFAULT_NODE_BUDGET: u64 = 50_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TdResult {
    pub size: usize,
    pub sample: Sample,
    /// Rivals that had to be separated.
    pub rivals: usize,
    /// Rivals agreeing with the target on the whole pool without a proof of
    /// equivalence; the size is exact only relative to them being equal.
    pub unresolved: Vec<Pattern>,
    pub bounds: Bounds,
}

/// Minimum teaching set for `target` within the enumerated class.
pub fn brute_force_td(target: &Pattern, spec: &ClassSpec, bounds: Bounds) -> Result<TdResult> {
    brute_force_td_with(target, spec, bounds, None, DEFAULT_NODE_BUDGET)
}

/// Minimum preference-based teaching set (rivals `r ≺ target` are ignored).
pub fn brute_force_pbtd(
    target: &Pattern,
    spec: &ClassSpec,
    pref: &PreferenceOrder,
    bounds: Bounds,
) -> Result<TdResult> {
    brute_force_td_with(target, spec, bounds, Some(pref), DEFAULT_NODE_BUDGET)
}

pub fn brute_force_td_with(
    target: &Pattern,
    spec: &ClassSpec,
    bounds: Bounds,
    pref: Option<&PreferenceOrder>,
    budget: u64,
) -> Result<TdResult> {
    let alpha = &spec.alphabet;
    let letters = rival_letters(alpha, target, None);
    let word_letters = working_letters(alpha, &letters, 1);
    let pool: Vec<Vec<Letter>> = (0..=bounds.max_word_len).flat_map(|n| words_of_len(&word_letters, n)).collect();
    let labels: Vec<bool> = pool.par_iter().map(|w| member_letters(w, target)).collect();
    let rivals = enumerate_with_letters(spec, bounds.max_pattern_len, &letters)?;
    let words = pool.len().div_ceil(64);

    // Per rival: skipped, or the rival with its disagreement bitset (None if unresolved).
    type Row = Option<(Pattern, Option<Vec<u64>>)>;
    let rows: Vec<Result<Row>> = rivals
        .par_iter()
        .map(|r| {
            if pref.is_some_and(|p| p.less(r, target)) {
                return Ok(None);
            }
            let mut bits = vec![0u64; words];
            let mut any = false;
            for (i, w) in pool.iter().enumerate() {
                if member_letters(w, r) != labels[i] {
                    bits[i / 64] |= 1 << (i % 64);
                    any = true;
                }
            }
            if any {
                return Ok(Some((r.clone(), Some(bits))));
            }
            match decide_equivalence(r, target, alpha, bounds.max_word_len) {
                Equivalence::Equal => Ok(None),
                Equivalence::Unknown => Ok(Some((r.clone(), None))),
                Equivalence::Different(_) => Err(pre(format!(
                    "rival {} differs from the target but not on words of length ≤ {}",
                    r.render(alpha),
                    bounds.max_word_len
                ))),
            }
        })
        .collect();
    let mut sets: Vec<Vec<u64>> = Vec::new();
    let mut unresolved = Vec::new();
    for row in rows {
        match row? {
            Some((_, Some(bits))) => sets.push(bits),
            Some((r, None)) => unresolved.push(r),
            None => {}
        }
    }
    let rivals_needing = sets.len();
    let sets = prune_dominated(sets);

    let mut search = HitSearch::new(&sets, pool.len(), budget);
    let all: Vec<usize> = (0..sets.len()).collect();
    let mut k = 0;
    while !search.can(&all, k, 0)? {
        k += 1;
    }
    let mut chosen = Vec::with_capacity(k);
    let mut unhit = all;
    let mut min = 0;
    for step in 0..k {
        let w = (min..pool.len())
            .map(|w| -> Result<Option<(usize, Vec<usize>)>> {
                let rest = search.remove_hit(&unhit, w);
                Ok(search.can(&rest, k - step - 1, w + 1)?.then_some((w, rest)))
            })
            .find_map(|r| r.transpose())
            .expect("a solution of this size exists")?;
        chosen.push(w.0);
        unhit = w.1;
        min = w.0 + 1;
    }
    let sample = Sample::from_examples(chosen.iter().map(|&i| (Word::from_letters(&pool[i]), labels[i])))?;
    Ok(TdResult { size: k, sample, rivals: rivals_needing, unresolved, bounds })
}

fn subset(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

/// Drops rivals whose hitting words include those of another rival.
fn prune_dominated(mut sets: Vec<Vec<u64>>) -> Vec<Vec<u64>> {
    sets.sort_by_key(|s| s.iter().map(|x| x.count_ones()).sum::<u32>());
    sets.dedup();
    let mut kept: Vec<Vec<u64>> = Vec::new();
    for s in sets {
        if !kept.iter().any(|k| subset(k, &s)) {
            kept.push(s);
        }
    }
    kept
}

struct HitSearch<'a> {
    sets: &'a [Vec<u64>],
    pool: usize,
    nodes: u64,
    budget: u64,
}

impl<'a> HitSearch<'a> {
    fn new(sets: &'a [Vec<u64>], pool: usize, budget: u64) -> Self {
        HitSearch { sets, pool, nodes: 0, budget }
    }

    fn hits(&self, r: usize, w: usize) -> bool {
        self.sets[r][w / 64] >> (w % 64) & 1 == 1
    }

    fn remove_hit(&self, unhit: &[usize], w: usize) -> Vec<usize> {
        unhit.iter().copied().filter(|&r| !self.hits(r, w)).collect()
    }

    /// Whether `k` words with index ≥ `min` hit every rival in `unhit`.
    fn can(&mut self, unhit: &[usize], k: usize, min: usize) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded(format!("more than {} search nodes", self.budget)));
        }
        if unhit.is_empty() {
            return Ok(true);
        }
        if k == 0 {
            return Ok(false);
        }
        let count = |r: usize| (min..self.pool).filter(|&w| self.hits(r, w)).count();
        let best = *unhit.iter().min_by_key(|&&r| count(r)).expect("nonempty");
        if count(best) == 0 {
            return Ok(false);
        }
        for w in min..self.pool {
            if self.hits(best, w) {
                let rest = self.remove_hit(unhit, w);
                if self.can(&rest, k - 1, min)? {
                    return Ok(true);
                }
            }
        }
        Ok(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;
    use crate::class::Family;
    use crate::pattern::parse_pattern;
    use crate::verifier::check::is_teaching_set;

    #[test]
    fn sbr_examples() {
        let a = Alphabet::binary();
        let spec = ClassSpec::new(Family::SimpleBlockRegular, a.clone()).unwrap();
        let r = brute_force_td(&parse_pattern("x1", &a).unwrap(), &spec, Bounds::new(4, 2)).unwrap();
        assert_eq!(r.size, 1);
        assert_eq!(r.sample.render(&a), "+ eps\n");
        let t = parse_pattern("x1 0 x2", &a).unwrap();
        let r = brute_force_td(&t, &spec, Bounds::new(5, 3)).unwrap();
        assert_eq!(r.size, 2);
        assert!(is_teaching_set(&t, &r.sample, &spec, Bounds::new(5, 3)).unwrap().is_confirmed());
    }

    #[test]
    fn budget_is_enforced() {
        let a = Alphabet::binary();
        let spec = ClassSpec::new(Family::SimpleBlockRegular, a.clone()).unwrap();
        let t = parse_pattern("x1 0 x2 1 x3", &a).unwrap();
        let r = brute_force_td_with(&t, &spec, Bounds::new(5, 4), None, 3);
        assert!(matches!(r, Err(Error::BudgetExceeded(_))));
    }

    #[test]
    fn larger_bounds_never_increase_size() {
        let a = Alphabet::binary();
        let spec = ClassSpec::new(Family::SimpleBlockRegular, a.clone()).unwrap();
        for s in ["x1", "x1 0 x2", "x1 1 x2 0 x3", "x1 0 x2 0 x3"] {
            let t = parse_pattern(s, &a).unwrap();
            let small = brute_force_td(&t, &spec, Bounds::new(4, 4)).unwrap();
            let big = brute_force_td(&t, &spec, Bounds::new(5, 5)).unwrap();
            if is_teaching_set(&t, &small.sample, &spec, Bounds::new(5, 5)).unwrap().is_confirmed() {
                assert!(big.size <= small.size, "{s}");
            }
        }
    }
}
