//! Prime generation: segmented sieve plus a deterministic Miller–Rabin test
//! for isolated 64-bit candidates.

/// Above this square-root bound the sieve's base-prime table would be too
/// large to build, and candidates are tested one at a time instead.
const MAX_SIEVE_ROOT: u64 = 1 << 26;

/// Witness set that makes Miller–Rabin deterministic for every `n < 2^64`.
const MR_BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in MR_BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in MR_BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

pub(crate) fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r.checked_mul(r).is_none_or(|sq| sq > n) {
        r -= 1;
    }
    while (r + 1).checked_mul(r + 1).is_some_and(|sq| sq <= n) {
        r += 1;
    }
    r
}

/// Primes up to and including `limit` (Eratosthenes).
pub fn small_primes(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let limit = limit as usize;
    let mut composite = vec![false; limit + 1];
    let mut out = Vec::new();
    for i in 2..=limit {
        if composite[i] {
            continue;
        }
        out.push(i as u64);
        let mut j = i * i;
        while j <= limit {
            composite[j] = true;
            j += i;
        }
    }
    out
}

/// Base primes for sieving windows up to `hi`, or `None` when `hi` is too
/// large to sieve and candidates must go through [`is_prime`].
pub(crate) fn base_primes_for(hi: u64) -> Option<Vec<u64>> {
    let root = isqrt(hi);
    (root <= MAX_SIEVE_ROOT).then(|| small_primes(root))
}

/// Primes in `[lo, hi]` given the base primes up to `√hi`.
pub(crate) fn sieve_window(lo: u64, hi: u64, base: Option<&[u64]>) -> Vec<u64> {
    if lo > hi {
        return Vec::new();
    }
    let Some(base) = base else {
        return (lo..=hi).filter(|&n| is_prime(n)).collect();
    };
    let len = (hi - lo + 1) as usize;
    let mut composite = vec![false; len];
    for &p in base {
        // smallest multiple of p in the window that is not p itself
        let start = (lo.div_ceil(p) * p).max(p * p);
        if start > hi {
            continue;
        }
        let mut j = start - lo;
        while j < len as u64 {
            composite[j as usize] = true;
            j += p;
        }
    }
    composite
        .iter()
        .enumerate()
        .filter(|&(i, &c)| !c && lo + i as u64 >= 2)
        .map(|(i, _)| lo + i as u64)
        .collect()
}

/// All primes `p` with `lo <= p <= hi`; empty when `lo > hi`.
pub fn primes_in_range(lo: u64, hi: u64) -> Vec<u64> {
    if lo > hi {
        return Vec::new();
    }
    let base = base_primes_for(hi);
    sieve_window(lo, hi, base.as_deref())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trial_division(n: u64) -> bool {
        n >= 2
            && (2..)
                .take_while(|d| d * d <= n)
                .all(|d| !n.is_multiple_of(d))
    }

    #[test]
    fn range_examples() {
        assert_eq!(primes_in_range(2, 10), vec![2, 3, 5, 7]);
        assert_eq!(primes_in_range(1090, 1100), vec![1091, 1093, 1097]);
        assert_eq!(primes_in_range(14, 16), Vec::<u64>::new());
        assert_eq!(primes_in_range(0, 2), vec![2]);
        assert!(primes_in_range(10, 2).is_empty());
    }

    #[test]
    fn sieve_matches_trial_division() {
        let expected: Vec<u64> = (0..5000).filter(|&n| trial_division(n)).collect();
        assert_eq!(primes_in_range(0, 4999), expected);
        let expected: Vec<u64> = (100_000..101_000).filter(|&n| trial_division(n)).collect();
        assert_eq!(primes_in_range(100_000, 100_999), expected);
    }

    #[test]
    fn miller_rabin_agrees_with_trial_division() {
        for n in 0..20_000 {
            assert_eq!(is_prime(n), trial_division(n), "n = {n}");
        }
    }

    #[test]
    fn miller_rabin_large_cases() {
        assert!(is_prime(18_446_744_073_709_551_557)); // largest prime below 2^64
        assert!(!is_prime(18_446_744_073_709_551_615));
        assert!(!is_prime(3_215_031_751)); // strong pseudoprime to bases 2, 3, 5, 7
        assert!(!is_prime(3_825_123_056_546_413_051)); // strong pseudoprime to bases up to 23
        assert!(is_prime(1_000_000_007));
    }

    #[test]
    fn huge_windows_fall_back_to_miller_rabin() {
        let hi = u64::MAX - 58;
        let lo = hi - 100;
        let got = primes_in_range(lo, hi);
        let expected: Vec<u64> = (lo..=hi).filter(|&n| is_prime(n)).collect();
        assert_eq!(got, expected);
        assert!(got.contains(&18_446_744_073_709_551_557));
    }

    #[test]
    fn isqrt_is_floor() {
        for n in [0u64, 1, 3, 4, 15, 16, 17, u64::MAX, (1 << 52) + 1] {
            let r = isqrt(n);
            assert!(r as u128 * r as u128 <= n as u128);
            assert!((r as u128 + 1) * (r as u128 + 1) > n as u128);
        }
    }
}
