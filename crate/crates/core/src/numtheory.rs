//! Integer utilities: primes, prime-power factors, coin representability.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

/// A prime power `q^r` with `r = v_q(source)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PrimePowerFactor {
    pub q: u64,
    pub r: u32,
    /// First exponent (in input order) with `v_q = r`.
    pub source: u64,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn primes_upto(n: u64) -> Vec<u64> {
    (2..=n).filter(|&p| is_prime(p)).collect()
}

/// Exponent of the prime `q` in `n > 0`.
pub fn valuation(mut n: u64, q: u64) -> u32 {
    let mut r = 0;
    while n > 0 && n.is_multiple_of(q) {
        n /= q;
        r += 1;
    }
    r
}

/// Distinct prime divisors of `n`, ascending.
pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Number of distinct prime factors.
pub fn omega(n: u64) -> usize {
    if n < 2 {
        0
    } else {
        prime_divisors(n).len()
    }
}

/// Number of prime powers `p^k ≤ n` with `k ≥ 1`.
pub fn prime_power_count(n: u64) -> usize {
    (2..=n).filter(|&x| prime_divisors(x).len() == 1).count()
}

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// Pairs `(q, v_q(n))` over every prime divisor `q` of every `n`,
/// deduplicated and sorted by `(q, r)`.
pub fn prime_power_factors(exponents: &[u64]) -> Vec<PrimePowerFactor> {
    let mut out: Vec<PrimePowerFactor> = Vec::new();
    for &n in exponents {
        for q in prime_divisors(n) {
            let r = valuation(n, q);
            if !out.iter().any(|f| f.q == q && f.r == r) {
                out.push(PrimePowerFactor { q, r, source: n });
            }
        }
    }
    out.sort();
    out
}

/// `q^(r−1) · ∏ p^⌊log_p m⌋` over primes `p ≤ m`, `p ≠ q`.
pub fn e_value(f: &PrimePowerFactor, m: u64) -> BigUint {
    let mut e = BigUint::from(f.q).pow(f.r - 1);
    for p in primes_upto(m) {
        if p == f.q {
            continue;
        }
        let mut pk = p;
        while pk * p <= m {
            pk *= p;
        }
        e *= pk;
    }
    e
}

/// Whether `t` is a non-negative integer combination of `coins` (all ≥ 1).
///
/// Uses `gcd(coins) | t`, then the bound that every multiple of the gcd at
/// or beyond `max²` is representable; below that, a reachability table.
pub fn coin_representable(t: &BigUint, coins: &[u64]) -> bool {
    if t.is_zero() {
        return true;
    }
    let coins: Vec<u64> = coins.iter().copied().filter(|&c| c > 0).collect();
    if coins.is_empty() {
        return false;
    }
    let g = coins.iter().fold(0u64, |a, &c| a.gcd(&c));
    if !(t % g).is_zero() {
        return false;
    }
    let t = t / g;
    let coins: Vec<usize> = coins.iter().map(|&c| (c / g) as usize).collect();
    let max = *coins.iter().max().unwrap();
    let t = match t.to_usize() {
        Some(t) if t < max * max => t,
        _ => return true,
    };
    let mut reach = vec![false; t + 1];
    reach[0] = true;
    for i in 1..=t {
        reach[i] = coins.iter().any(|&c| c <= i && reach[i - c]);
    }
    reach[t]
}
