//! Simple block-regular patterns among regular patterns: the three-example
//! sets, checked against the bounded oracle.

use pattern_teach::builders::sr_vs_regular_set;
use pattern_teach::verifier::{brute_force_td, consistent, is_teaching_set, Bounds};
use pattern_teach::{membership, parse_pattern, parse_word, Alphabet, ClassSpec, Family, Letter, Pattern};

fn skeletons(k: u32, len: usize) -> impl Iterator<Item = Vec<Letter>> {
    (0..k.pow(len as u32)).map(move |code| (0..len).map(|i| Letter(code / k.pow(i as u32) % k)).collect())
}

fn confirm_all(alpha: &Alphabet, len: usize) {
    let spec = ClassSpec::new(Family::Regular, alpha.clone()).unwrap();
    for skel in skeletons(3, len) {
        let p = Pattern::sbr_from_skeleton(&skel);
        let s = sr_vs_regular_set(&p, alpha).unwrap();
        assert!(s.len() <= 3);
        let v = is_teaching_set(&p, &s, &spec, Bounds::new(2 * len + 2, 9)).unwrap();
        assert!(v.is_confirmed(), "{}\n{}{}", p.render(alpha), s.render(alpha), v.render(alpha));
    }
}

#[test]
fn every_construction_validates() {
    for alpha in [Alphabet::binary(), Alphabet::ternary(), Alphabet::finite("0123".chars()).unwrap()] {
        let k = alpha.size().unwrap() as u32;
        for len in 0..=5 {
            for skel in skeletons(k, len) {
                let p = Pattern::sbr_from_skeleton(&skel);
                sr_vs_regular_set(&p, &alpha).unwrap_or_else(|e| panic!("{}: {e}", p.render(&alpha)));
            }
        }
    }
}

#[test]
fn binary_sets_need_a_uniform_skeleton() {
    let b = Alphabet::binary();
    let spec = ClassSpec::new(Family::Regular, b.clone()).unwrap();
    for len in 0..=4 {
        for skel in skeletons(2, len) {
            let p = Pattern::sbr_from_skeleton(&skel);
            let s = sr_vs_regular_set(&p, &b).unwrap();
            let v = is_teaching_set(&p, &s, &spec, Bounds::new(2 * len + 2, 9)).unwrap();
            let uniform = skel.windows(2).all(|w| w[0] == w[1]);
            assert_eq!(v.is_confirmed(), uniform, "{}\n{}{}", p.render(&b), s.render(&b), v.render(&b));
        }
    }
}

#[test]
fn binary_boundary_rival() {
    let b = Alphabet::binary();
    let spec = ClassSpec::new(Family::Regular, b.clone()).unwrap();
    let p = parse_pattern("x1 0 x2 0 x3 1 x4 1 x5", &b).unwrap();
    let s = sr_vs_regular_set(&p, &b).unwrap();
    let rival = parse_pattern("x1 0 x2 0 x3 0 x4 1 x5", &b).unwrap();
    assert!(consistent(&rival, &s, &b).unwrap());
    let sep = parse_word("0011", &b).unwrap();
    assert!(membership(&sep, &p, &b).unwrap() && !membership(&sep, &rival, &b).unwrap());

    // Three examples still suffice.
    let p = parse_pattern("x1 1 x2 0 x3", &b).unwrap();
    let r = brute_force_td(&p, &spec, Bounds::new(6, 6)).unwrap();
    assert_eq!(r.size, 3);
    assert!(r.unresolved.is_empty());
}

#[test]
fn ternary_sets_are_teaching_sets() {
    for len in 0..=3 {
        confirm_all(&Alphabet::ternary(), len);
    }
}

#[test]
#[ignore = "several minutes in release mode"]
fn ternary_sets_are_teaching_sets_length_four() {
    confirm_all(&Alphabet::ternary(), 4);
}
