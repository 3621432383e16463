//! Wieferich primes: `2^{p-1} ≡ 1 (mod p^2)`.

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::primes::{base_primes_for, is_prime, pow_mod, sieve_window};
use crate::error::{Error, Result};

/// Scanner window width.
pub const BLOCK: u64 = 1 << 20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WieferichScanReport {
    pub lo: u64,
    pub hi: u64,
    pub primes_tested: u64,
    pub hits: Vec<u64>,
}

fn wieferich_unchecked(p: u64) -> bool {
    if p < 1 << 32 {
        let m = p * p;
        pow_mod(2, p - 1, m) == 1
    } else {
        let p = BigUint::from(p);
        let m = &p * &p;
        BigUint::from(2u32).modpow(&(p - 1u32), &m) == BigUint::from(1u32)
    }
}

pub fn is_wieferich(p: u64) -> Result<bool> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(wieferich_unchecked(p))
}

/// Tests every prime in `[lo, hi]` on the global rayon pool.
pub fn wieferich_scan(lo: u64, hi: u64) -> Result<WieferichScanReport> {
    wieferich_scan_with_threads(lo, hi, None)
}

/// Like [`wieferich_scan`], on a dedicated pool of `threads` workers
/// (`None` uses the global pool). The report does not depend on the
/// thread count.
pub fn wieferich_scan_with_threads(
    lo: u64,
    hi: u64,
    threads: Option<usize>,
) -> Result<WieferichScanReport> {
    if lo < 2 || lo > hi {
        return Err(Error::InvalidRange { lo, hi });
    }
    match threads {
        None => Ok(scan(lo, hi)),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n.max(1))
                .build()
                .map_err(|e| Error::InvalidParameter(e.to_string()))?;
            Ok(pool.install(|| scan(lo, hi)))
        }
    }
}

fn scan(lo: u64, hi: u64) -> WieferichScanReport {
    let base = base_primes_for(hi);
    let blocks = (hi - lo) / BLOCK + 1;
    let per_block: Vec<(u64, Vec<u64>)> = (0..blocks)
        .into_par_iter()
        .map(|b| {
            let start = lo + b * BLOCK;
            let end = start.saturating_add(BLOCK - 1).min(hi);
            let primes = sieve_window(start, end, base.as_deref());
            let hits = primes
                .iter()
                .copied()
                .filter(|&p| wieferich_unchecked(p))
                .collect();
            (primes.len() as u64, hits)
        })
        .collect();

    let mut primes_tested = 0;
    let mut hits = Vec::new();
    for (count, block_hits) in per_block {
        primes_tested += count;
        hits.extend(block_hits);
    }
    WieferichScanReport {
        lo,
        hi,
        primes_tested,
        hits,
    }
}
