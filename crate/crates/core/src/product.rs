//! Infinite-product form of unit power series.
//!
//! Every integer series with constant term 1 has exactly one representation
//!
//! ```text
//! f(x) = (1 - m_1 x)(1 - m_2 x^2)(1 - m_3 x^3) ...
//! ```
//!
//! with integer `m_k`. Truncated at order `N` only `m_1..m_N` matter. The
//! exponents are found one index at a time: once `m_1..m_{k-1}` are fixed,
//! the partial product agrees with `f` below `x^k` and its `x^k` coefficient
//! `C` is known, so the factor `1 - m_k x^k` must supply `C - a_k`.
//!
//! All expansions use the single convention `1 - m_k x^k`. The sign-flipped
//! form `1 + ñ_k x^k` is only produced by [`ProductExpansion::tilde`].
//!
//! Exponents are indexed from 1 everywhere outside this file's internals.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Coefficient;
use crate::series::TruncatedSeries;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(
    try_from = "ExpansionRecord<T>",
    into = "ExpansionRecord<T>",
    bound = "T: Coefficient"
)]
pub struct ProductExpansion<T> {
    // exponents[k - 1] = m_k
    exponents: Vec<T>,
}

/// Wire form: `{"order": N, "exponents": ["m_1", ..., "m_N"]}`; the first
/// list entry is `m_1`.
#[derive(Serialize, Deserialize)]
#[serde(bound = "T: Coefficient")]
struct ExpansionRecord<T> {
    order: usize,
    #[serde(with = "crate::decimal::vec")]
    exponents: Vec<T>,
}

impl<T: Coefficient> TryFrom<ExpansionRecord<T>> for ProductExpansion<T> {
    type Error = Error;

    fn try_from(record: ExpansionRecord<T>) -> Result<Self> {
        if record.exponents.len() != record.order {
            return Err(Error::Malformed(format!(
                "order {} needs {} exponents, got {}",
                record.order,
                record.order,
                record.exponents.len()
            )));
        }
        Ok(Self::new(record.exponents))
    }
}

impl<T: Coefficient> From<ProductExpansion<T>> for ExpansionRecord<T> {
    fn from(m: ProductExpansion<T>) -> Self {
        ExpansionRecord {
            order: m.order(),
            exponents: m.exponents,
        }
    }
}

impl<T: Coefficient> ProductExpansion<T> {
    /// `exponents[0]` is `m_1`.
    pub fn new(exponents: Vec<T>) -> Self {
        Self { exponents }
    }

    pub fn zeros(order: usize) -> Self {
        Self::new(vec![T::zero(); order])
    }

    /// `m_k = 1` for every k: the product `(x; x)_∞`.
    pub fn ones(order: usize) -> Self {
        Self::new(vec![T::one(); order])
    }

    pub fn order(&self) -> usize {
        self.exponents.len()
    }

    /// `m_k`, 1-based.
    pub fn exponent(&self, k: usize) -> &T {
        assert!(
            k >= 1 && k <= self.order(),
            "exponent index {k} outside 1..={}",
            self.order()
        );
        &self.exponents[k - 1]
    }

    /// `m_1..m_N` in order.
    pub fn exponents(&self) -> &[T] {
        &self.exponents
    }

    pub fn into_exponents(self) -> Vec<T> {
        self.exponents
    }

    /// Pairs `(k, m_k)` with 1-based `k`.
    pub fn indexed(&self) -> impl Iterator<Item = (usize, &T)> {
        self.exponents.iter().enumerate().map(|(i, m)| (i + 1, m))
    }

    /// Unique expansion `f = ∏ (1 - m_k x^k)` modulo `x^{N+1}`.
    pub fn expand(f: &TruncatedSeries<T>) -> Result<Self> {
        if !f.constant().is_one() {
            return Err(Error::ConstantNotOne(f.constant().to_string()));
        }
        let n = f.order();
        let mut partial = TruncatedSeries::<T>::one(n).into_coeffs();
        let mut exponents = Vec::with_capacity(n);
        for k in 1..=n {
            let m_k = partial[k].clone() - f.coeff(k);
            apply_factor(&mut partial, k, &m_k);
            exponents.push(m_k);
        }
        Ok(Self { exponents })
    }

    /// Multiplies out `∏_{k=1}^{N} (1 - m_k x^k)` modulo `x^{N+1}`.
    pub fn to_series(&self) -> TruncatedSeries<T> {
        let n = self.order();
        let mut coeffs = TruncatedSeries::<T>::one(n).into_coeffs();
        for (k, m_k) in self.indexed() {
            apply_factor(&mut coeffs, k, m_k);
        }
        TruncatedSeries::new(coeffs).expect("order + 1 coefficients")
    }

    /// The exponents `n_k` of `1/f`, so that
    /// `∏ (1 - m_k x^k) · ∏ (1 - n_k x^k) ≡ 1`.
    pub fn inverse(&self) -> Self {
        let reciprocal = self
            .to_series()
            .reciprocal()
            .expect("a product of (1 - m_k x^k) has constant term 1");
        Self::expand(&reciprocal).expect("reciprocal of a unit series has constant term 1")
    }

    /// Elementwise negation, turning `∏ (1 - m_k x^k)` into `∏ (1 + ñ_k x^k)`.
    pub fn tilde(&self) -> Self {
        Self::new(self.exponents.iter().map(|m| -m.clone()).collect())
    }
}

/// In place: `p <- p · (1 - m x^k)` modulo `x^{len}`.
fn apply_factor<T: Coefficient>(p: &mut [T], k: usize, m: &T) {
    if m.is_zero() {
        return;
    }
    let mut term = T::zero();
    // descending so p[i - k] is still the old value
    for i in (k..p.len()).rev() {
        if p[i - k].is_zero() {
            continue;
        }
        term.clone_from(&p[i - k]);
        term *= m;
        p[i] -= &term;
    }
}

/// Free-function spelling of [`ProductExpansion::expand`].
pub fn expand_to_product<T: Coefficient>(f: &TruncatedSeries<T>) -> Result<ProductExpansion<T>> {
    ProductExpansion::expand(f)
}

pub fn product_to_series<T: Coefficient>(m: &ProductExpansion<T>) -> TruncatedSeries<T> {
    m.to_series()
}

pub fn inverse_sequence<T: Coefficient>(m: &ProductExpansion<T>) -> ProductExpansion<T> {
    m.inverse()
}

pub fn tilde_transform<T: Coefficient>(m: &ProductExpansion<T>) -> ProductExpansion<T> {
    m.tilde()
}
