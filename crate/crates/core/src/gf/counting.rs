//! Möbius function and the count of monic irreducible polynomials.

/// Möbius function: 1 at 1, `(-1)^r` for a product of `r` distinct primes, else 0.
pub fn mobius(d: u64) -> i8 {
    assert!(d >= 1, "mobius is defined for positive integers");
    let mut n = d;
    let mut sign = 1i8;
    let mut q = 2u64;
    while q * q <= n {
        if n.is_multiple_of(q) {
            n /= q;
            if n.is_multiple_of(q) {
                return 0;
            }
            sign = -sign;
        }
        q += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

pub fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// `N(p, m) = (1/m) sum_{d | m} mobius(d) p^{m/d}`.
///
/// Panics if `p^m` does not fit in 127 bits.
pub fn count_irreducible(p: u64, m: u64) -> u128 {
    assert!(m >= 1);
    let sum: i128 = divisors(m)
        .into_iter()
        .map(|d| {
            let pw = (p as i128)
                .checked_pow((m / d) as u32)
                .expect("p^m overflows i128");
            mobius(d) as i128 * pw
        })
        .sum();
    debug_assert!(sum >= 0 && sum % m as i128 == 0);
    (sum / m as i128) as u128
}
