//! Backtracking matcher for patterns over an arbitrary symbol type.
//!
//! Variables are bound at their first occurrence, trying image lengths
//! ascending from 0; later occurrences are compared directly. Each binding
//! is pruned by the remaining fixed length, a gcd test on the occurrence
//! counts of still-unbound variables, and the same two tests per letter.

use std::collections::HashMap;
use std::hash::Hash;
use std::ops::Range;

use num_integer::Integer;

/// A pattern symbol over letters of type `T`; variables are dense indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PSym<T> {
    Const(T),
    Var(usize),
}

/// Finds the first substitution (in search order) mapping `pat` onto `word`.
/// Returns the image range in `word` of every variable.
pub fn solve<T: Copy + Eq + Hash>(pat: &[PSym<T>], word: &[T], nvars: usize) -> Option<Vec<Option<Range<usize>>>> {
    let mut m = Search::new(pat, word, nvars)?;
    if !m.feasible(0, 0) {
        return None;
    }
    if m.go(0, 0) {
        Some(m.bind)
    } else {
        None
    }
}

struct Search {
    pat: Vec<PSym<usize>>,
    w: Vec<usize>,
    nletters: usize,
    nvars: usize,
    /// `occ[i * nvars + v]`: occurrences of `v` in `pat[i..]`.
    occ: Vec<u32>,
    /// `cconst[i * nletters + a]`: constants `a` in `pat[i..]`.
    cconst: Vec<u32>,
    /// `wcount[i * nletters + a]`: letters `a` in `word[i..]`.
    wcount: Vec<u32>,
    nconst: Vec<usize>,
    bind: Vec<Option<Range<usize>>>,
    /// Letter counts of each bound image.
    img: Vec<u32>,
    need: Vec<u32>,
}

impl Search {
    fn new<T: Copy + Eq + Hash>(pat: &[PSym<T>], word: &[T], nvars: usize) -> Option<Self> {
        let mut ids: HashMap<T, usize> = HashMap::new();
        let w: Vec<usize> = word
            .iter()
            .map(|c| {
                let n = ids.len();
                *ids.entry(*c).or_insert(n)
            })
            .collect();
        let mut p = Vec::with_capacity(pat.len());
        for s in pat {
            p.push(match *s {
                PSym::Var(v) => PSym::Var(v),
                // A constant absent from the word can never match.
                PSym::Const(c) => PSym::Const(*ids.get(&c)?),
            });
        }
        let nl = ids.len().max(1);
        let n = p.len();
        let mut occ = vec![0u32; (n + 1) * nvars];
        let mut cconst = vec![0u32; (n + 1) * nl];
        let mut nconst = vec![0usize; n + 1];
        for i in (0..n).rev() {
            let (lo, hi) = occ.split_at_mut((i + 1) * nvars);
            lo[i * nvars..].copy_from_slice(&hi[..nvars]);
            let (lo, hi) = cconst.split_at_mut((i + 1) * nl);
            lo[i * nl..].copy_from_slice(&hi[..nl]);
            nconst[i] = nconst[i + 1];
            match p[i] {
                PSym::Var(v) => occ[i * nvars + v] += 1,
                PSym::Const(a) => {
                    cconst[i * nl + a] += 1;
                    nconst[i] += 1;
                }
            }
        }
        let m = w.len();
        let mut wcount = vec![0u32; (m + 1) * nl];
        for i in (0..m).rev() {
            let (lo, hi) = wcount.split_at_mut((i + 1) * nl);
            lo[i * nl..].copy_from_slice(&hi[..nl]);
            wcount[i * nl + w[i]] += 1;
        }
        Some(Search {
            pat: p,
            w,
            nletters: nl,
            nvars,
            occ,
            cconst,
            wcount,
            nconst,
            bind: vec![None; nvars],
            img: vec![0; nvars * nl],
            need: vec![0; nl],
        })
    }

    fn feasible(&mut self, pi: usize, wi: usize) -> bool {
        let rem = self.w.len() - wi;
        let occ = &self.occ[pi * self.nvars..(pi + 1) * self.nvars];
        let mut fixed = self.nconst[pi];
        let mut g = 0u32;
        let nl = self.nletters;
        self.need.copy_from_slice(&self.cconst[pi * nl..(pi + 1) * nl]);
        for (v, &o) in occ.iter().enumerate() {
            if o == 0 {
                continue;
            }
            match &self.bind[v] {
                Some(r) => {
                    fixed += o as usize * r.len();
                    for a in 0..nl {
                        self.need[a] += o * self.img[v * nl + a];
                    }
                }
                None => g = g.gcd(&o),
            }
        }
        if fixed > rem {
            return false;
        }
        let slack = (rem - fixed) as u32;
        if g == 0 && slack != 0 || g > 1 && !slack.is_multiple_of(g) {
            return false;
        }
        let have = &self.wcount[wi * nl..(wi + 1) * nl];
        for (&h, &n) in have.iter().zip(&self.need[..nl]) {
            if h < n {
                return false;
            }
            let r = h - n;
            if g == 0 && r != 0 || g > 1 && r % g != 0 {
                return false;
            }
        }
        true
    }

    fn go(&mut self, pi: usize, wi: usize) -> bool {
        if pi == self.pat.len() {
            return wi == self.w.len();
        }
        match self.pat[pi] {
            PSym::Const(a) => wi < self.w.len() && self.w[wi] == a && self.go(pi + 1, wi + 1),
            PSym::Var(v) => {
                if let Some(r) = self.bind[v].clone() {
                    let len = r.len();
                    if wi + len > self.w.len() || self.w[r] != self.w[wi..wi + len] {
                        return false;
                    }
                    return self.go(pi + 1, wi + len);
                }
                let occ_here = self.occ[pi * self.nvars + v] as usize;
                let rem = self.w.len() - wi;
                let nl = self.nletters;
                for len in 0..=rem / occ_here {
                    self.bind[v] = Some(wi..wi + len);
                    for a in 0..nl {
                        self.img[v * nl + a] = 0;
                    }
                    for &a in &self.w[wi..wi + len] {
                        self.img[v * nl + a] += 1;
                    }
                    if self.feasible(pi + 1, wi + len) && self.go(pi + 1, wi + len) {
                        return true;
                    }
                }
                self.bind[v] = None;
                false
            }
        }
    }
}
