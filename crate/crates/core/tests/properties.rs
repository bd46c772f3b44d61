//! Property tests against brute-force oracles written independently of the
//! library's matcher.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigUint;
use proptest::prelude::*;

use pattern_teach::builders::{
    hat_word, noncross_pbt_witness, noncross_td_set, noncross_unary_set, qr_pbt_witness, qr_unary_set, sr_pbt_set,
    sr_td_set, sr_vs_all_set, sr_vs_regular_set, sr_zero_chain_set,
};
use pattern_teach::matcher::{member_letters, staircase_word};
use pattern_teach::verifier::{brute_force_td, consistent, equivalent_bounded, Bounds};
use pattern_teach::{
    binary_regular_normalize, membership, noncross_staircase_membership, parse_pattern, parse_word, shuffle_member,
    staircase_decompose, subsequence, Alphabet, ClassSpec, Family, Letter, Pattern, Sample, Sym, Word,
};

fn bin() -> Alphabet {
    Alphabet::binary()
}

fn letters(max: usize) -> impl Strategy<Value = Vec<Letter>> {
    prop::collection::vec((0u32..2).prop_map(Letter), 0..=max)
}

/// Patterns over {0, 1, x1..x4}, at least one symbol.
fn patterns(max: usize) -> impl Strategy<Value = Pattern> {
    let sym = prop_oneof![(0u32..2).prop_map(|l| Sym::Const(Letter(l))), (1u32..=4).prop_map(Sym::Var)];
    prop::collection::vec(sym, 1..=max).prop_map(|s| Pattern::new(s).unwrap())
}

fn regular_patterns(max: usize) -> impl Strategy<Value = Pattern> {
    prop::collection::vec(prop::option::of(0u32..2), 1..=max).prop_map(|cells| {
        let mut next = 0;
        let syms = cells
            .into_iter()
            .map(|c| match c {
                Some(l) => Sym::Const(Letter(l)),
                None => {
                    next += 1;
                    Sym::Var(next)
                }
            })
            .collect();
        Pattern::new(syms).unwrap()
    })
}

fn word_of(l: &[Letter]) -> Word {
    Word::from_letters(l)
}

/// Direct definition: some substitution of binary words produces `w`.
fn oracle(p: &Pattern, w: &[Letter]) -> bool {
    fn go(syms: &[Sym], w: &[Letter], h: &mut HashMap<u32, Vec<Letter>>) -> bool {
        let Some((&first, rest)) = syms.split_first() else { return w.is_empty() };
        match first {
            Sym::Const(l) => w.first() == Some(&l) && go(rest, &w[1..], h),
            Sym::Var(x) => match h.get(&x).cloned() {
                Some(img) => w.starts_with(&img) && go(rest, &w[img.len()..], h),
                None => (0..=w.len()).any(|n| {
                    h.insert(x, w[..n].to_vec());
                    let ok = go(rest, &w[n..], h);
                    h.remove(&x);
                    ok
                }),
            },
        }
    }
    go(p.syms(), w, &mut HashMap::new())
}

fn is_subsequence(u: &[Letter], w: &[Letter]) -> bool {
    let mut it = w.iter();
    u.iter().all(|c| it.any(|d| d == c))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 256, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn matcher_agrees_with_definition(p in patterns(6), w in letters(9)) {
        prop_assert_eq!(member_letters(&w, &p), oracle(&p, &w));
        prop_assert_eq!(membership(&word_of(&w), &p, &bin()).unwrap(), oracle(&p, &w));
    }

    #[test]
    fn substituted_words_are_members(p in patterns(6), imgs in prop::collection::vec(letters(3), 4)) {
        let h: HashMap<u32, Word> = imgs.iter().enumerate().map(|(i, l)| (i as u32 + 1, word_of(l))).collect();
        let w = p.substitute(&h);
        prop_assert!(membership(&w, &p, &bin()).unwrap());
    }

    #[test]
    fn words_round_trip(w in letters(40)) {
        let word = word_of(&w);
        let text = word.render(&bin());
        prop_assert_eq!(parse_word(&text, &bin()).unwrap(), word.clone());
        prop_assert_eq!(word.to_letters(100).unwrap(), w.clone());
        prop_assert_eq!(word.len_usize(), Some(w.len()));
    }

    #[test]
    fn concatenation_is_semantic(u in letters(12), v in letters(12)) {
        let joined: Vec<Letter> = u.iter().chain(&v).copied().collect();
        prop_assert_eq!(word_of(&u).concat(&word_of(&v)), word_of(&joined));
    }

    #[test]
    fn subsequence_matches_definition(u in letters(6), w in letters(10)) {
        let s = is_subsequence(&u, &w);
        prop_assert_eq!(subsequence(&word_of(&u), &word_of(&w)), s);
        // Subsequences are exactly the skeletons whose shuffle ideal holds w.
        prop_assert_eq!(member_letters(&w, &Pattern::sbr_from_skeleton(&u)), s);
    }

    #[test]
    fn interleavings_are_shuffles(u in letters(6), v in letters(6), picks in prop::collection::vec(any::<bool>(), 12)) {
        let (mut i, mut j, mut w) = (0, 0, Vec::new());
        for pick in picks.iter().chain(std::iter::repeat(&true)) {
            if i == u.len() && j == v.len() {
                break;
            }
            if (*pick && i < u.len()) || j == v.len() {
                w.push(u[i]);
                i += 1;
            } else {
                w.push(v[j]);
                j += 1;
            }
        }
        prop_assert!(shuffle_member(&w, &u, &v));
        prop_assert!(shuffle_member(&w, &v, &u));
    }

    #[test]
    fn shuffles_have_both_as_subsequences(w in letters(8), u in letters(4), v in letters(4)) {
        if shuffle_member(&w, &u, &v) {
            prop_assert_eq!(w.len(), u.len() + v.len());
            prop_assert!(is_subsequence(&u, &w) && is_subsequence(&v, &w));
        }
    }

    #[test]
    fn normalize_keeps_the_language(p in patterns(6)) {
        let n = p.normalize();
        prop_assert_eq!(n.normalize(), n.clone());
        prop_assert!(equivalent_bounded(&p, &n, &bin(), 7));
    }

    #[test]
    fn binary_normalization_keeps_the_language(p in regular_patterns(8)) {
        let n = binary_regular_normalize(&p, &bin()).unwrap();
        prop_assert!(n.len() <= p.len());
        prop_assert!(equivalent_bounded(&p, &n, &bin(), 9), "{} vs {}", p.render(&bin()), n.render(&bin()));
    }

    #[test]
    fn bounded_equivalence_is_an_equivalence(p in patterns(4), q in patterns(4)) {
        prop_assert!(equivalent_bounded(&p, &p, &bin(), 6));
        prop_assert_eq!(equivalent_bounded(&p, &q, &bin(), 6), equivalent_bounded(&q, &p, &bin(), 6));
    }

    #[test]
    fn staircase_decider_agrees(exps in prop::collection::vec(1u32..=5, 1..=3), counts in prop::collection::vec(1u32..=6, 1..=4)) {
        let p = Pattern::noncross(&exps).unwrap();
        let w = staircase_word(&counts.iter().map(|&c| BigUint::from(c)).collect::<Vec<_>>());
        let form = staircase_decompose(&w).unwrap();
        prop_assert_eq!(form.to_word(), w.clone());
        let flat = w.to_letters(1000).unwrap();
        prop_assert_eq!(noncross_staircase_membership(&form, &exps), member_letters(&flat, &p));
    }

    #[test]
    fn hat_word_lemma(skel in letters(6)) {
        prop_assume!(!skel.is_empty());
        let hat = hat_word(&word_of(&skel)).unwrap().to_letters(100).unwrap();
        prop_assert!(!is_subsequence(&skel, &hat));
        for drop in 0..skel.len() {
            let mut sub = skel.clone();
            sub.remove(drop);
            prop_assert!(is_subsequence(&sub, &hat));
        }
    }

    #[test]
    fn binary_sets_have_the_structural_facts(skel in letters(7)) {
        let p = Pattern::sbr_from_skeleton(&skel);
        let s = sr_vs_regular_set(&p, &bin()).unwrap();
        prop_assert!(consistent(&p, &s, &bin()).unwrap());
        let pos: Vec<Vec<Letter>> = s.positives().map(|w| w.to_letters(1000).unwrap()).collect();
        if pos.len() == 2 && skel.iter().collect::<BTreeSet<_>>().len() == 2 {
            let (w1, w2) = (&pos[0], &pos[1]);
            prop_assert!(w1.windows(2).all(|d| d[0] != d[1]), "w1 {:?}", w1);
            prop_assert!(w2.windows(3).all(|d| !(d[0] == d[2] && d[0] != d[1])), "w2 {:?}", w2);
            prop_assert_ne!(w1.first(), w2.first());
            prop_assert_ne!(w1.last(), w2.last());
        }
    }

    #[test]
    fn sbr_constructions_fit_their_pattern(skel in prop::collection::vec((0u32..3).prop_map(Letter), 0..=6)) {
        let tern = Alphabet::ternary();
        let p = Pattern::sbr_from_skeleton(&skel);
        for s in [sr_td_set(&p).unwrap(), sr_pbt_set(&p).unwrap(), sr_vs_regular_set(&p, &tern).unwrap()] {
            prop_assert!(consistent(&p, &s, &tern).unwrap());
        }
        if let Ok(s) = sr_vs_all_set(&p, &tern) {
            prop_assert!(consistent(&p, &s, &tern).unwrap());
        }
    }

    #[test]
    fn noncross_constructions_fit_their_pattern(exps in prop::collection::vec(1u32..=6, 1..=3)) {
        let p = Pattern::noncross(&exps).unwrap();
        match noncross_td_set(&p, 6) {
            Ok(set) => {
                prop_assert!(consistent(&p, &set.sample(), &bin()).unwrap());
                for t in &set.t_words {
                    prop_assert!(!membership(&t.word, &p, &bin()).unwrap());
                    prop_assert!(membership(&t.word, &Pattern::noncross(&t.rival).unwrap(), &bin()).unwrap());
                }
            }
            Err(_) => prop_assert!(exps.contains(&1)),
        }
        let w = noncross_pbt_witness(&p).unwrap();
        prop_assert!(membership(&w, &p, &bin()).unwrap());
        let u = noncross_unary_set(&p, 6).unwrap();
        prop_assert!(consistent(&p, &u, &Alphabet::unary()).unwrap());
        prop_assert_eq!(u.len(), 7);
    }

    #[test]
    fn qr_witness_respects_the_colouring(p in patterns(6)) {
        let cf = Pattern::new(p.syms().iter().filter(|s| s.is_var()).copied().collect());
        prop_assume!(cf.is_ok());
        let cf = cf.unwrap().normalize();
        let freqs: BTreeSet<usize> = cf.var_freqs().values().copied().collect();
        prop_assume!(freqs.len() == 1);
        let m = *freqs.iter().next().unwrap();
        let big = Alphabet::finite("0123456789".chars()).unwrap();
        let (w, g) = qr_pbt_witness(&cf, &big).unwrap();
        prop_assert!(membership(&w, &cf, &big).unwrap());
        prop_assert!(g.conditions_hold());
        prop_assert!(g.colours() <= 4 * m * m + 1);
    }
}

#[test]
fn unary_qr_sets_fit() {
    let u = Alphabet::unary();
    for k in 0..5 {
        for m in 1..4 {
            let text = format!("{} {}", "0 ".repeat(k), "x1 ".repeat(m));
            let p = parse_pattern(&text, &u).unwrap();
            let s: Sample = qr_unary_set(&p, m, &u).unwrap();
            assert!(consistent(&p, &s, &u).unwrap() && s.len() <= 3);
        }
    }
}

#[test]
fn zero_chain_sets_fit() {
    let b = bin();
    for n in 1..=5 {
        let s = sr_zero_chain_set(n, &b).unwrap();
        let text = (1..=n).map(|i| format!("x{i} 0 ")).collect::<String>() + &format!("x{}", n + 1);
        let p = parse_pattern(&text, &b).unwrap();
        assert!(consistent(&p, &s, &b).unwrap());
        assert_eq!(s.len(), 2 * n + 2);
    }
}

#[test]
fn qr_witness_golden() {
    let b = bin();
    let p = parse_pattern("x1 x2 x1 x2", &b).unwrap();
    let (w, g) = qr_pbt_witness(&p, &b).unwrap();
    assert_eq!(w, parse_word("01^3010^4101^3010^41", &b).unwrap());
    assert_eq!((g.colouring[&1], g.colouring[&2]), (1, 2));
}

#[test]
fn td_grows_with_the_bounds() {
    let b = bin();
    for spec in [
        ClassSpec::new(Family::SimpleBlockRegular, b.clone()).unwrap(),
        ClassSpec::new(Family::Regular, b.clone()).unwrap(),
    ] {
        for pat in ["x1", "x1 0 x2", "x1 0 x2 1 x3", "x1 0 x2 0 x3"] {
            let p = parse_pattern(pat, &b).unwrap();
            let sizes: Vec<usize> =
                [3, 4, 5].iter().map(|&l| brute_force_td(&p, &spec, Bounds::new(l, 5)).unwrap().size).collect();
            assert!(sizes.windows(2).all(|s| s[0] <= s[1]), "{pat}: {sizes:?}");
        }
    }
}
