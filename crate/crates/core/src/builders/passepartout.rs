//! `x1² x2² x3²` has no finite teaching set among constant-free patterns
//! with variable frequency at most 4: for any finite set of positives there
//! is a pattern `τ` (a passe-partout) with the positives in `L(τ)` and
//! `L(τ)` strictly inside `L(x1² x2² x3²)`.

use super::validate;
use crate::alphabet::{Alphabet, Letter};
use crate::error::{pre, Error, Result};
use crate::matcher::{match_witness, member_letters, pattern_morphism, Morphism};
use crate::pattern::{Pattern, Sym};
use crate::sample::Sample;
use crate::verifier::words_of_len;
use crate::word::{Word, DEFAULT_MATERIALIZE_CAP};

/// `x1² x2² x3²`.
pub fn x222() -> Pattern {
    Pattern::noncross(&[2, 2, 2]).expect("nonempty")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PassePartout {
    pub tau: Pattern,
    /// `ψ` with `ψ(x1² x2² x3²) = τ`.
    pub psi: Morphism,
}

impl PassePartout {
    /// The shortest word `u u v v w w` with `|uvw| ≤ max_half` that lies
    /// outside `L(τ)` (binary letters, shortest first, then lexicographic).
    pub fn separator(&self, max_half: usize) -> Option<Word> {
        let bin = [Letter(0), Letter(1)];
        for half in 0..=max_half {
            for uvw in words_of_len(&bin, half) {
                for i in 0..=half {
                    for j in i..=half {
                        let (u, v, w) = (&uvw[..i], &uvw[i..j], &uvw[j..]);
                        let word = [u, u, v, v, w, w].concat();
                        if !member_letters(&word, &self.tau) {
                            return Some(Word::from_letters(&word));
                        }
                    }
                }
            }
        }
        None
    }
}

/// Builds a passe-partout for nonempty binary words of `L(x1² x2² x3²)`
/// (empty words are ignored). Each word contributes `γ1 γ2 γ3`, the
/// concatenation `σ(x1) σ(x2) σ(x3)` of a matching substitution with its
/// letter occurrences replaced pairwise by fresh variables; then
/// `τ = (γ1…)² (γ2…)² (γ3…)²`.
pub fn passe_partout(positives: &[Word]) -> Result<PassePartout> {
    let p = x222();
    let words: Vec<&Word> = positives.iter().filter(|w| !w.is_empty()).collect();
    if words.is_empty() {
        return Err(pre("needs at least one nonempty positive"));
    }
    let mut next_var = 1u32;
    let mut gammas: [Vec<Sym>; 3] = Default::default();
    for w in words {
        let letters = w.to_letters(DEFAULT_MATERIALIZE_CAP)?;
        if letters.iter().any(|l| l.0 > 1) {
            return Err(pre("positives must be binary"));
        }
        let sigma = match_witness(w, &p)?.ok_or_else(|| pre(format!("positive {w:?} is not in L(x1² x2² x3²)")))?;
        let part = |v: u32| sigma.assignment[&v].to_letters(DEFAULT_MATERIALIZE_CAP);
        let (s1, s2, s3) = (part(1)?, part(2)?, part(3)?);
        let tilde: Vec<Letter> = [&s1[..], &s2, &s3].concat();
        let in_first = |d: Letter| tilde.contains(&d) && !tilde[s1.len()..].contains(&d);
        let case1 = [Letter(0), Letter(1)].into_iter().find(|&d| in_first(d));
        // Occurrences of `x_letter` are paired into x-variables; the rest into y-variables.
        let x_letter = case1.unwrap_or(Letter(0));
        let (mut xs, mut ys) = (Vec::new(), Vec::new());
        let tau_i: Vec<Sym> = tilde
            .iter()
            .map(|&l| {
                let pool = if l == x_letter { &mut xs } else { &mut ys };
                let k = pool.len();
                if k % 2 == 0 {
                    pool.push(next_var);
                    next_var += 1;
                } else {
                    pool.push(pool[k - 1]);
                }
                Sym::Var(pool[k])
            })
            .collect();
        let (g1, g2, g3): (&[Sym], &[Sym], &[Sym]) = match case1 {
            Some(_) => (&[], &tau_i[..s1.len()], &tau_i[tau_i.len() - s2.len() - s3.len()..]),
            None => (&tau_i[..s1.len()], &tau_i[s1.len()..s1.len() + s2.len()], &tau_i[s1.len() + s2.len()..]),
        };
        gammas[0].extend_from_slice(g1);
        gammas[1].extend_from_slice(g2);
        gammas[2].extend_from_slice(g3);
    }
    let syms: Vec<Sym> = gammas.iter().flat_map(|g| g.iter().chain(g.iter()).copied()).collect();
    let raw = Pattern::new(syms).map_err(|_| Error::Construction("passe-partout is empty".into()))?;
    let tau = raw.normalize();
    let psi = pattern_morphism(&p, &tau).ok_or_else(|| Error::Construction("no morphism onto τ".into()))?;
    if tau.max_freq() > 4 || !tau.is_constant_free() {
        return Err(Error::Construction("passe-partout has a variable occurring more than 4 times".into()));
    }
    let sample = Sample::from_examples(positives.iter().map(|w| (w.clone(), true)))?;
    validate(&tau, &sample, &Alphabet::binary())?;
    Ok(PassePartout { tau, psi })
}

/// The six-example set `{ε, 0²1²0²}` positive, `{0, 01²0, 0³,
/// (01)²(0²1)²(0³1)²(0⁴1)²}` negative for `x1² x2² x3²`.
///
/// It rules out every non-cross rival with frequency at most 3, but it is
/// not a teaching set among all such patterns: `x1² x2 x3 x2 x4 x3 x4` is
/// consistent with it and also generates `01001101`.
pub fn fixed_x222_set() -> Sample {
    let b = Alphabet::binary();
    let s = crate::sample::parse_sample("+ eps\n+ 001100\n- 0\n- 0110\n- 000\n- (01)^2(001)^2(0001)^2(00001)^2\n", &b)
        .expect("well-formed");
    debug_assert!(validate(&x222(), &s, &b).is_ok());
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::parse_word;

    #[test]
    fn single_positive() {
        let b = Alphabet::binary();
        let w = parse_word("001100", &b).unwrap();
        let pp = passe_partout(std::slice::from_ref(&w)).unwrap();
        assert!(member_letters(&w.to_letters(100).unwrap(), &pp.tau));
        assert!(pp.tau.max_freq() <= 4);
        assert!(pp.separator(5).is_some());
        assert!(passe_partout(&[]).is_err());
        assert!(passe_partout(&[Word::empty()]).is_err());
        assert!(passe_partout(&[parse_word("01", &b).unwrap()]).is_err());
    }

    #[test]
    fn several_positives() {
        let b = Alphabet::binary();
        let ws: Vec<Word> =
            ["001100", "0000", "1111", "010111", "11001100"].iter().map(|s| parse_word(s, &b).unwrap()).collect();
        let pp = passe_partout(&ws).unwrap();
        for w in &ws {
            assert!(member_letters(&w.to_letters(100).unwrap(), &pp.tau));
        }
        assert!(pp.separator(5).is_some());
    }

    #[test]
    fn fixed_set() {
        let s = fixed_x222_set();
        let b = Alphabet::binary();
        assert_eq!(s.label_of(&parse_word("001100", &b).unwrap()), Some(true));
        let lens: Vec<String> = s.negatives().map(|w| w.len().to_string()).collect();
        assert_eq!(lens, ["1", "4", "3", "28"]);
        validate(&x222(), &s, &b).unwrap();
    }
}
