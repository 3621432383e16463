//! Exact infinite-product expansions of integer power series.
//!
//! Any integer power series with constant term 1 factors uniquely as
//! `∏_{k≥1} (1 - m_k x^k)` with integer `m_k`. This crate computes that
//! factorization at a fixed truncation order, the divisor-sum ("ghost")
//! sequence `L_N = Σ_{d|N} d·m_d^{N/d}` of its log derivative, inverse
//! exponent sequences, and the number-theoretic identities that fall out
//! of them: Fermat quotients, Fermat's little theorem, Wieferich primes and
//! the partition function.
//!
//! The series machinery is generic over the coefficient ring
//! ([`Coefficient`]); the aliases below fix it to [`BigInt`], which is what
//! everything beyond toy orders needs.

pub mod cli;
pub mod congruence;
pub mod decimal;
pub mod error;
pub mod ghost;
pub mod product;
pub mod scalar;
pub mod series;

pub use num_bigint::BigInt;

pub use error::{Error, Result};
pub use ghost::{
    divisors, exponents_from_ghost, ghost_from_exponents, verify_reciprocal_identity, GhostSequence,
};
pub use product::{
    expand_to_product, inverse_sequence, product_to_series, tilde_transform, ProductExpansion,
};
pub use scalar::Coefficient;
pub use series::TruncatedSeries;

/// Big-integer truncated series.
pub type Series = TruncatedSeries<BigInt>;
/// Big-integer product exponents `m_1..m_N`.
pub type Expansion = ProductExpansion<BigInt>;
/// Big-integer ghost sequence `L_1..L_N`.
pub type Ghost = GhostSequence<BigInt>;

/// Builds a big-integer series from its coefficients `c_0..c_N`.
pub fn make_series<I, C>(coeffs: I) -> Result<Series>
where
    I: IntoIterator<Item = C>,
    C: Into<BigInt>,
{
    Series::new(coeffs.into_iter().map(Into::into).collect())
}
