//! The three-example teaching set of a simple block-regular pattern among
//! regular patterns, over alphabets with at least three letters.
//!
//! Letters are numbered `1, 2, …` in alphabet order and classified by the
//! parity of their number. With `I[j]` the number of the `j`-th separator
//! of `x1 a1 x2 … xn`, the first positive `w1` fills an inner variable with
//! the smallest letter of the opposite parity when its neighbours have equal
//! parity; the second positive `w2` fills variables via `ψ`; the negative
//! `w3 = α1 … α(n−2)` is assembled case by case from `ψ`, where `αj` handles
//! the separator pair `(I[j], I[j+1])`. Overlapping cases are resolved by
//! taking the first that applies.

use crate::alphabet::{Alphabet, Letter};
use crate::error::{pre, Result};

type W = Vec<Letter>;

struct Ctx {
    letters: Vec<Letter>,
    /// `idx[j]` for `j = 1..n−1`; `idx[0]` is unused.
    idx: Vec<usize>,
    n: usize,
}

impl Ctx {
    fn a(&self, t: usize) -> Letter {
        self.letters[t - 1]
    }

    fn even(&self, j: usize) -> bool {
        self.idx[j].is_multiple_of(2)
    }

    /// Smallest odd-numbered letter other than `avoid`.
    fn odd_except(&self, avoid: Letter) -> Letter {
        (1..=self.letters.len()).step_by(2).map(|t| self.a(t)).find(|&l| l != avoid).expect("at least three letters")
    }

    fn smallest_except(&self, avoid: &[Letter]) -> Letter {
        *self.letters.iter().find(|l| !avoid.contains(l)).expect("at least three letters")
    }

    fn pe(&self, j: usize) -> bool {
        j >= 2 && self.even(j - 1)
    }

    fn po(&self, j: usize) -> bool {
        j >= 2 && !self.even(j - 1)
    }

    fn ne(&self, j: usize) -> bool {
        j + 2 < self.n && self.even(j + 2)
    }

    fn no(&self, j: usize) -> bool {
        j + 2 < self.n && !self.even(j + 2)
    }

    fn last(&self, j: usize) -> bool {
        j + 2 >= self.n
    }

    /// `ψ(x_{j+1})` for an inner variable, `1 ≤ j ≤ n−2`.
    fn psi_inner(&self, j: usize) -> W {
        let (left, right) = (self.idx[j], self.idx[j + 1]);
        match (left % 2 == 0, right % 2 == 0) {
            (l, r) if l == r => vec![],
            (true, false) if self.pe(j) => vec![self.odd_except(self.a(right))],
            (true, false) => vec![self.a(2), self.odd_except(self.a(right))],
            _ => vec![self.odd_except(self.a(left))],
        }
    }
}

/// `(w1, w2, w3)` for the skeleton `a1 … a(n−1)`, `n ≥ 2`.
pub(super) fn sets(skel: &[Letter], alpha: &Alphabet) -> Result<(W, W, W)> {
    let letters = alpha.letters();
    if letters.len() < 3 {
        return Err(pre("needs at least three letters"));
    }
    if skel.is_empty() {
        return Err(pre("needs at least two variables"));
    }
    let n = skel.len() + 1;
    if n == 2 {
        let a = skel[0];
        let b = *letters.iter().find(|&&l| l != a).expect("three letters");
        return Ok((vec![a], vec![b, a, b], vec![]));
    }
    let mut idx = vec![0];
    for l in skel {
        idx.push(letters.iter().position(|x| x == l).ok_or_else(|| pre("letter outside the alphabet"))? + 1);
    }
    let c = Ctx { letters, idx, n };

    // psi[i] = ψ(x_i), 1-based.
    let mut psi: Vec<W> = vec![vec![]; n + 1];
    for j in 1..=n - 2 {
        psi[j + 1] = c.psi_inner(j);
    }
    psi[n] = vec![c.smallest_except(&[c.a(c.idx[n - 1]), c.a(c.idx[n - 2])])];

    let mut w1 = Vec::new();
    for j in 1..n {
        w1.push(c.a(c.idx[j]));
        if j < n - 1 && c.even(j) == c.even(j + 1) {
            w1.push(c.odd_except_parity(j));
        }
    }

    // ψ(x1) avoids a(I[1]) and the letter after it in w2; that choice can
    // put the block ψ(x1) a(I[1]) into w2, which then has to reappear in α1.
    // Otherwise ψ(x1) avoids a(I[1]) and a(I[2]).
    let second = psi[2].first().copied().unwrap_or(c.a(c.idx[2]));
    let near = c.smallest_except(&[c.a(c.idx[1]), second]);
    psi[1] = vec![near];
    if !alpha_j(&c, &psi, 1).windows(2).any(|f| f == [near, c.a(c.idx[1])]) {
        psi[1] = vec![c.smallest_except(&[c.a(c.idx[1]), c.a(c.idx[2])])];
    }
    let mut w2 = psi[1].clone();
    for j in 1..n {
        w2.push(c.a(c.idx[j]));
        w2.extend(&psi[j + 1]);
    }
    let w3 = (1..=n - 2).flat_map(|j| alpha_j(&c, &psi, j)).collect();
    Ok((w1, w2, w3))
}

impl Ctx {
    /// Smallest letter whose number has the parity opposite to `I[j]`.
    fn odd_except_parity(&self, j: usize) -> Letter {
        let start = if self.even(j) { 1 } else { 2 };
        self.a(start)
    }
}

fn cat(parts: &[&[Letter]]) -> W {
    parts.concat()
}

fn alpha_j(c: &Ctx, psi: &[W], j: usize) -> W {
    let n = c.n;
    let (a, b) = (c.a(c.idx[j]), c.a(c.idx[j + 1]));
    let (p1, pn, pj) = (&psi[1][..], &psi[n][..], &psi[j][..]);
    let first = j == 1;
    let last = c.last(j);
    match (c.even(j), c.even(j + 1)) {
        (true, true) => {
            let (j1, j2) = (&psi[j][..], &psi[(j + 2).min(n)][..]);
            if c.po(j) && c.no(j) {
                if a != b {
                    cat(&[&[b], j2, j1, &[a]])
                } else {
                    cat(&[j1, &[a], j2])
                }
            } else if c.po(j) && (c.ne(j) || last) {
                let tail: &[Letter] = if c.ne(j) { &[] } else { pn };
                let mut w = if a != b { cat(&[&[b], tail, j1, &[a]]) } else { cat(&[j1, &[a], tail]) };
                if last && !w.ends_with(pn) {
                    w.extend(pn);
                }
                w
            } else if c.no(j) && (c.pe(j) || first) {
                let head: &[Letter] = if c.pe(j) { &[] } else { p1 };
                let mut w = if a != b { cat(&[&[b], j2, head, &[a]]) } else { cat(&[head, &[a], j2]) };
                if first && !w.starts_with(p1) {
                    w.splice(0..0, p1.iter().copied());
                }
                w
            } else {
                ends_variant(j, last, a, b, p1, pn, c.pe(j) && c.ne(j))
            }
        }
        (false, false) => ends_variant(j, last, a, b, p1, pn, !first && !last),
        (false, true) => {
            let j1 = &psi[j + 1][..];
            let pj: &[Letter] = if first { &[] } else { pj };
            if c.no(j) && (c.pe(j) || c.po(j) || first) {
                let next = &psi[j + 2];
                let (j2, j3) = (next[0], next[next.len() - 1]);
                if j3 == a {
                    cat(&[j1, &[b, j2], pj, &[j2, a], j1])
                } else {
                    cat(&[j1, &[b, j2], pj, &[j2, j3, a], j1])
                }
            } else if c.pe(j) && c.ne(j) {
                cat(&[j1, &[b], pj, &[a], j1])
            } else if c.pe(j) && last {
                cat(&[j1, &[b], pn, pj, pn, &[a], j1, pn])
            } else if c.po(j) && c.ne(j) {
                cat(&[j1, &[b, a], j1])
            } else if first {
                cat(&[p1, j1, &[b], p1, &[a], j1])
            } else {
                cat(&[j1, &[b], pn, &[a], j1, pn])
            }
        }
        (true, false) => {
            let mid = &psi[j + 1];
            let (j1, j2): (&[Letter], Letter) = (&mid[..mid.len() - 1], mid[mid.len() - 1]);
            let next = &psi[(j + 2).min(n)][..];
            if j >= 2 && j + 3 <= n {
                cat(&[&[j2, b], next, pj, &[a], j1, &[j2]])
            } else if first {
                cat(&[p1, &[j2, b], next, p1, &[a], j1, &[j2]])
            } else {
                cat(&[&[j2, b], pn, pj, &[a], j1, &[j2], pn])
            }
        }
    }
}

/// The `[B, A]` / `[A]` family with the endpoint letters attached.
fn ends_variant(j: usize, last: bool, a: Letter, b: Letter, p1: &[Letter], pn: &[Letter], middle: bool) -> W {
    let differ = a != b;
    if middle {
        if differ {
            vec![b, a]
        } else {
            vec![a]
        }
    } else if j == 1 && last {
        if differ {
            cat(&[p1, &[b], pn, p1, &[a], pn])
        } else {
            cat(&[p1, &[a], pn])
        }
    } else if j == 1 {
        if differ {
            cat(&[p1, &[b], p1, &[a]])
        } else {
            cat(&[p1, &[a]])
        }
    } else {
        if differ {
            cat(&[&[b], pn, &[a], pn])
        } else {
            cat(&[&[a], pn])
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::parse_word;

    fn letters(s: &str) -> W {
        parse_word(s, &Alphabet::ternary()).unwrap().to_letters(100).unwrap()
    }

    fn run(skel: &str) -> (W, W, W) {
        sets(&letters(skel), &Alphabet::ternary()).unwrap()
    }

    #[test]
    fn golden() {
        let (w1, w2, w3) = run("01211");
        assert_eq!(w1, letters("012101"));
        assert_eq!(w2, letters("10211020110"));
        assert_eq!(w3, letters("2111020202110011020010"));
    }

    #[test]
    fn two_variables() {
        assert_eq!(run("0"), (letters("0"), letters("101"), vec![]));
        assert_eq!(run("1"), (letters("1"), letters("010"), vec![]));
    }
}
