//! Membership over a one-letter alphabet: a numerical-semigroup question.

use num_bigint::BigUint;

use crate::numtheory::coin_representable;
use crate::pattern::Pattern;

/// Whether `0^n ∈ L(p)` for a pattern over a single letter: `n − |consts|`
/// must be a non-negative combination of the variable frequencies.
pub fn unary_membership(n: &BigUint, p: &Pattern) -> bool {
    let c = BigUint::from(p.const_letters().len());
    if *n < c {
        return false;
    }
    let freqs: Vec<u64> = p.var_freqs().values().map(|&f| f as u64).collect();
    coin_representable(&(n - c), &freqs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;
    use crate::pattern::parse_pattern;

    fn mem(n: u32, p: &str) -> bool {
        unary_membership(&BigUint::from(n), &parse_pattern(p, &Alphabet::unary()).unwrap())
    }

    #[test]
    fn examples() {
        assert!(!mem(5, "00 x1^2"));
        assert!(mem(6, "00 x1^2"));
        assert!(mem(0, "x1"));
        assert!(mem(7, "x1^2 x2^3"));
        assert!(!mem(1, "x1^2 x2^3"));
        assert!(!mem(1, "00"));
    }
}
