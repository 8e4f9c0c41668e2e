//! Small integer helpers: factorisation and prime sets of desk-scale orders.

use std::collections::BTreeSet;

pub use num_integer::Integer;

/// Prime factorisation by trial division, primes ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn prime_divisors(n: u64) -> BTreeSet<u64> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n) == vec![(n, 1)]
}

/// The largest power of `p` dividing `n`.
pub fn p_part(n: u64, p: u64) -> u64 {
    let mut n = n;
    let mut part = 1;
    while n.is_multiple_of(p) {
        n /= p;
        part *= p;
    }
    part
}

/// `Some(p)` when `n = p^a` with `a ≥ 1`.
pub fn prime_power_base(n: u64) -> Option<u64> {
    match factorize(n).as_slice() {
        [(p, _)] => Some(*p),
        _ => None,
    }
}

/// `Some(e)` with `base^e = n`, for `base ≥ 2`.
pub fn exact_log(n: u64, base: u64) -> Option<u32> {
    if base < 2 || n == 0 {
        return None;
    }
    let mut x = 1u64;
    let mut e = 0;
    while x < n {
        x = x.checked_mul(base)?;
        e += 1;
    }
    (x == n).then_some(e)
}
