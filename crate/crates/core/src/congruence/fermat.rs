//! Fermat quotients read off product exponents.
//!
//! Two routes lead to `p | (d+1)^p - d^p - 1` for an odd prime `p`:
//!
//! * The family `f = 1 - x - Σ_{n≥1} d^n x^{n+1} = (1 - (d+1)x)/(1 - dx)`
//!   has ghost `L_N = (d+1)^N - d^N`. At a prime index only the divisors
//!   1 and p contribute, so `p · m_p = (d+1)^p - d^p - 1`.
//! * For `f = 1 - x - d x^2 + ...` and its reciprocal, the ghosts at
//!   `N = 2p` must cancel. Writing out the divisors 1, 2, p, 2p of both
//!   sides gives
//!   `2p·m_{2p} + p·m_p² + 2d^p + 1 = -2p·n_{2p} - p·n_p² + 2(d+1)^p - 1`,
//!   hence `(d+1)^p - d^p - 1 = p · (m_{2p} + n_{2p} + m_p²)`.
//!
//! Summing the second over `d = 1..a-1` telescopes to `a^p - a`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::primes::{is_prime, pow_mod};
use crate::error::{Error, Result};
use crate::product::ProductExpansion;
use crate::series::TruncatedSeries;

/// `f = (1 - (d+1)x)/(1 - dx)` truncated at a fixed order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFamily {
    pub d: BigInt,
    pub order: usize,
}

impl RationalFamily {
    pub fn new(d: impl Into<BigInt>, order: usize) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidParameter(
                "family order must be at least 1".into(),
            ));
        }
        Ok(Self { d: d.into(), order })
    }

    /// Coefficients `1, -1, -d, -d^2, ...`, checked against the closed form
    /// by verifying `(1 - dx) · f = 1 - (d+1)x`.
    pub fn series(&self) -> Result<TruncatedSeries<BigInt>> {
        let n = self.order;
        let mut coeffs = Vec::with_capacity(n + 1);
        coeffs.push(BigInt::one());
        coeffs.push(-BigInt::one());
        let mut d_pow = BigInt::one();
        for _ in 2..=n {
            d_pow *= &self.d;
            coeffs.push(-d_pow.clone());
        }
        let f = TruncatedSeries::new(coeffs)?;

        let mut denom = vec![BigInt::zero(); n + 1];
        denom[0] = BigInt::one();
        denom[1] = -self.d.clone();
        let mut numer = vec![BigInt::zero(); n + 1];
        numer[0] = BigInt::one();
        numer[1] = -(&self.d + 1u32);
        let lhs = TruncatedSeries::new(denom)?.mul(&f)?;
        if lhs.coeffs() != numer.as_slice() {
            return Err(Error::IdentityViolation(format!(
                "(1 - dx)·f != 1 - (d+1)x for d = {}",
                self.d
            )));
        }
        Ok(f)
    }

    pub fn expansion(&self) -> Result<ProductExpansion<BigInt>> {
        ProductExpansion::expand(&self.series()?)
    }
}

pub fn rational_family_series(
    d: impl Into<BigInt>,
    order: usize,
) -> Result<TruncatedSeries<BigInt>> {
    RationalFamily::new(d, order)?.series()
}

/// `(d+1)^p - d^p - 1`, evaluated directly.
pub fn fermat_numerator(d: &BigInt, p: u64) -> BigInt {
    let e = p as u32;
    Pow::pow(d + 1u32, e) - Pow::pow(d, e) - 1
}

fn require_odd_prime(p: u64) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p == 2 {
        return Err(Error::EvenPrime);
    }
    if p > u64::from(u32::MAX) {
        return Err(Error::InvalidParameter(format!(
            "prime {p} is too large to expand to"
        )));
    }
    Ok(())
}

fn require_positive(name: &str, d: &BigInt) -> Result<()> {
    if d.is_positive() {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "{name} must be at least 1, got {d}"
        )))
    }
}

/// The product exponent `m_p` of the rational family, i.e.
/// `((d+1)^p - d^p - 1)/p`. The result is checked against the closed form.
pub fn fermat_quotient_via_product(d: impl Into<BigInt>, p: u64) -> Result<BigInt> {
    let d = d.into();
    require_positive("d", &d)?;
    require_odd_prime(p)?;
    let m = RationalFamily::new(d.clone(), p as usize)?.expansion()?;
    let m_p = m.exponent(p as usize).clone();
    let numerator = fermat_numerator(&d, p);
    if &m_p * BigInt::from(p) != numerator {
        return Err(Error::IdentityViolation(format!(
            "p·m_p = {} but (d+1)^p - d^p - 1 = {numerator} (d = {d}, p = {p})",
            &m_p * BigInt::from(p)
        )));
    }
    Ok(m_p)
}

/// Every term of the `N = 2p` reciprocal identity for one `(d, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FermatWitness {
    #[serde(with = "crate::decimal")]
    pub d: BigInt,
    pub p: u64,
    #[serde(with = "crate::decimal")]
    pub m_p: BigInt,
    #[serde(with = "crate::decimal")]
    pub m_2p: BigInt,
    #[serde(with = "crate::decimal")]
    pub n_p: BigInt,
    #[serde(with = "crate::decimal")]
    pub n_2p: BigInt,
    /// `((d+1)^p - d^p - 1)/p`.
    #[serde(with = "crate::decimal")]
    pub quotient: BigInt,
}

/// Witness built from the zero-tail representative `f = 1 - x - d x^2`.
pub fn fermat_witness(d: impl Into<BigInt>, p: u64) -> Result<FermatWitness> {
    let d = d.into();
    require_positive("d", &d)?;
    require_odd_prime(p)?;
    let order = 2 * p as usize;
    let f = TruncatedSeries::from_prefix(vec![BigInt::one(), -BigInt::one(), -d], order)?;
    fermat_witness_for_series(&f, p)
}

/// Witness for any `f = 1 - x - d x^2 + Σ_{k≥3} a_k x^k` of order at least `2p`;
/// `d` is read from the `x^2` coefficient.
pub fn fermat_witness_for_series(f: &TruncatedSeries<BigInt>, p: u64) -> Result<FermatWitness> {
    require_odd_prime(p)?;
    let p_idx = p as usize;
    let order = 2 * p_idx;
    if f.order() < order {
        return Err(Error::InvalidParameter(format!(
            "series of order {} is too short for N = 2p = {order}",
            f.order()
        )));
    }
    if !f.constant().is_one() || !(-f.coeff(1)).is_one() {
        return Err(Error::InvalidParameter("series must start 1 - x".into()));
    }
    let f = f.truncate(order);
    let d = -f.coeff(2).clone();

    let m = ProductExpansion::expand(&f)?;
    let n = ProductExpansion::expand(&f.reciprocal()?)?;
    let (m_p, m_2p) = (m.exponent(p_idx).clone(), m.exponent(order).clone());
    let (n_p, n_2p) = (n.exponent(p_idx).clone(), n.exponent(order).clone());

    let minus_d_plus_one: BigInt = -(&d + 1u32);
    if m.exponent(2) != &d || n.exponent(2) != &minus_d_plus_one {
        return Err(Error::IdentityViolation(format!(
            "expected m_2 = d = {d} and n_2 = -(d+1), got {} and {}",
            m.exponent(2),
            n.exponent(2)
        )));
    }
    if m_p != -n_p.clone() {
        return Err(Error::IdentityViolation(format!(
            "m_p = {m_p} but n_p = {n_p}"
        )));
    }

    let big_p = BigInt::from(p);
    let two_p = BigInt::from(2 * p);
    let e = p as u32;
    let lhs = &two_p * &m_2p + &big_p * &m_p * &m_p + 2 * Pow::pow(&d, e) + 1;
    let rhs = -(&two_p * &n_2p) - &big_p * &n_p * &n_p + 2 * Pow::pow(&d + 1u32, e) - 1;
    if lhs != rhs {
        return Err(Error::IdentityViolation(format!(
            "N = 2p identity: {lhs} != {rhs} (d = {d}, p = {p})"
        )));
    }

    let quotient = &m_2p + &n_2p + &m_p * &m_p;
    let numerator = fermat_numerator(&d, p);
    if &quotient * &big_p != numerator {
        return Err(Error::IdentityViolation(format!(
            "p·quotient = {} but (d+1)^p - d^p - 1 = {numerator}",
            &quotient * &big_p
        )));
    }

    Ok(FermatWitness {
        d,
        p,
        m_p,
        m_2p,
        n_p,
        n_2p,
        quotient,
    })
}

/// `p | a^p - a`, established twice: as the telescoped sum of
/// `p · quotient(d)` over `d = 1..a-1`, and by modular exponentiation.
/// True iff both routes say so.
pub fn fermat_check(a: u64, p: u64) -> Result<bool> {
    if a == 0 {
        return Err(Error::InvalidParameter("a must be at least 1".into()));
    }
    Ok(*fermat_check_upto(a, p)?.last().expect("a >= 1"))
}

/// [`fermat_check`] for every `a` in `1..=a_max`, sharing the running sum.
/// Entry `i` is the result for `a = i + 1`.
pub fn fermat_check_upto(a_max: u64, p: u64) -> Result<Vec<bool>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let big_p = BigInt::from(p);
    let mut total = BigInt::zero();
    let mut results = Vec::with_capacity(a_max as usize);
    for a in 1..=a_max {
        if a > 1 {
            let d = BigInt::from(a - 1);
            let q = if p == 2 {
                // (d+1)^2 - d^2 - 1 = 2d
                d
            } else {
                fermat_witness(d, p)?.quotient
            };
            total += &big_p * q;
        }
        let big_a = BigInt::from(a);
        let closed = Pow::pow(&big_a, p as u32) - &big_a;
        if total != closed {
            return Err(Error::IdentityViolation(format!(
                "telescoped sum {total} != a^p - a = {closed} (a = {a}, p = {p})"
            )));
        }
        let by_sum = total.is_multiple_of(&big_p);
        let by_modpow = pow_mod(a % p, p, p) == a % p;
        results.push(by_sum && by_modpow);
    }
    Ok(results)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn family_examples() {
        assert_eq!(
            rational_family_series(1, 5).unwrap().coeffs(),
            ints(&[1, -1, -1, -1, -1, -1]).as_slice()
        );
        assert_eq!(
            rational_family_series(0, 4).unwrap().coeffs(),
            ints(&[1, -1, 0, 0, 0]).as_slice()
        );
        assert_eq!(
            rational_family_series(2, 4).unwrap().coeffs(),
            ints(&[1, -1, -2, -4, -8]).as_slice()
        );
        assert!(rational_family_series(2, 0).is_err());
    }

    #[test]
    fn family_d1_exponents() {
        let m = RationalFamily::new(1, 8).unwrap().expansion().unwrap();
        assert_eq!(m.exponents(), ints(&[1, 1, 2, 3, 6, 8, 18, 27]).as_slice());
    }

    #[test]
    fn quotient_examples() {
        assert_eq!(fermat_quotient_via_product(1, 3).unwrap(), BigInt::from(2));
        assert_eq!(fermat_quotient_via_product(1, 7).unwrap(), BigInt::from(18));
        assert_eq!(fermat_quotient_via_product(2, 5).unwrap(), BigInt::from(42));
    }

    #[test]
    fn quotient_errors() {
        assert_eq!(fermat_quotient_via_product(1, 9), Err(Error::NotPrime(9)));
        assert_eq!(fermat_quotient_via_product(1, 2), Err(Error::EvenPrime));
        assert!(matches!(
            fermat_quotient_via_product(0, 3),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn witness_examples() {
        let w = fermat_witness(1, 3).unwrap();
        assert_eq!(
            (w.m_p, w.m_2p, w.n_p, w.n_2p, w.quotient),
            (
                BigInt::from(1),
                BigInt::from(2),
                BigInt::from(-1),
                BigInt::from(-1),
                BigInt::from(2)
            )
        );
        assert_eq!(fermat_witness(1, 5).unwrap().quotient, BigInt::from(6));
        assert_eq!(fermat_witness(3, 3).unwrap().quotient, BigInt::from(12));
    }

    #[test]
    fn witness_with_nonzero_tail() {
        let f =
            TruncatedSeries::from_prefix(ints(&[1, -1, -4, 7, -3, 0, 11, 2, -9, 5]), 14).unwrap();
        let w = fermat_witness_for_series(&f, 7).unwrap();
        assert_eq!(w.d, BigInt::from(4));
        assert_eq!(
            w.quotient,
            (Pow::pow(BigInt::from(5), 7u32) - Pow::pow(BigInt::from(4), 7u32) - 1) / 7
        );
    }

    #[test]
    fn witness_rejects_short_or_malformed_series() {
        let short = TruncatedSeries::from_prefix(ints(&[1, -1, -1]), 5).unwrap();
        assert!(fermat_witness_for_series(&short, 3).is_err());
        let wrong = TruncatedSeries::from_prefix(ints(&[1, 1, -1]), 6).unwrap();
        assert!(fermat_witness_for_series(&wrong, 3).is_err());
    }

    #[test]
    fn witness_json_uses_strings() {
        let json = serde_json::to_string(&fermat_witness(1, 3).unwrap()).unwrap();
        assert_eq!(
            json,
            r#"{"d":"1","p":3,"m_p":"1","m_2p":"2","n_p":"-1","n_2p":"-1","quotient":"2"}"#
        );
    }

    #[test]
    fn check_examples() {
        assert!(fermat_check(1, 5).unwrap());
        assert!(fermat_check(10, 7).unwrap());
        assert!(fermat_check(50, 97).unwrap());
        assert!(fermat_check(9, 2).unwrap());
    }

    #[test]
    fn check_errors() {
        assert_eq!(fermat_check(3, 4), Err(Error::NotPrime(4)));
        assert!(fermat_check(0, 3).is_err());
    }
}
