//! Shared inputs for the benchmarks in `benches/`.

use std::collections::HashMap;

use pattern_teach::{Letter, Pattern, Word};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// A random binary word of length `n`.
pub fn random_word(rng: &mut StdRng, n: usize) -> Word {
    let letters: Vec<Letter> = (0..n).map(|_| Letter(rng.gen_range(0..2))).collect();
    Word::from_letters(&letters)
}

/// `count` members of `L(p)`, each variable replaced by a random binary
/// word of length at most `max_image`.
pub fn members(p: &Pattern, count: usize, max_image: usize, seed: u64) -> Vec<Word> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let h: HashMap<u32, Word> = p
                .vars()
                .into_iter()
                .map(|v| {
                    let n = rng.gen_range(0..=max_image);
                    (v, random_word(&mut rng, n))
                })
                .collect();
            p.substitute(&h)
        })
        .collect()
}

/// `count` random binary words of length `n`.
pub fn words(count: usize, n: usize, seed: u64) -> Vec<Word> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..count).map(|_| random_word(&mut rng, n)).collect()
}
