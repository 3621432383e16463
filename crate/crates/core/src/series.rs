//! Truncated formal power series with exact integer coefficients.
//!
//! A [`TruncatedSeries`] of order `N` stores `c_0..=c_N` and represents the
//! class of a power series modulo `x^{N+1}`. Every operation here works at a
//! fixed order; binary operations refuse operands of different orders unless
//! one of them is re-truncated first with [`TruncatedSeries::truncate`].

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ghost::GhostSequence;
use crate::scalar::Coefficient;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(
    try_from = "SeriesRecord<T>",
    into = "SeriesRecord<T>",
    bound = "T: Coefficient"
)]
pub struct TruncatedSeries<T> {
    coeffs: Vec<T>,
}

/// Wire form: `{"order": N, "coeffs": ["c_0", ..., "c_N"]}`.
#[derive(Serialize, Deserialize)]
#[serde(bound = "T: Coefficient")]
struct SeriesRecord<T> {
    order: usize,
    #[serde(with = "crate::decimal::vec")]
    coeffs: Vec<T>,
}

impl<T: Coefficient> TryFrom<SeriesRecord<T>> for TruncatedSeries<T> {
    type Error = Error;

    fn try_from(record: SeriesRecord<T>) -> Result<Self> {
        if record.coeffs.len() != record.order + 1 {
            return Err(Error::Malformed(format!(
                "order {} needs {} coefficients, got {}",
                record.order,
                record.order + 1,
                record.coeffs.len()
            )));
        }
        Self::new(record.coeffs)
    }
}

impl<T: Coefficient> From<TruncatedSeries<T>> for SeriesRecord<T> {
    fn from(series: TruncatedSeries<T>) -> Self {
        SeriesRecord {
            order: series.order(),
            coeffs: series.coeffs,
        }
    }
}

impl<T: Coefficient> TruncatedSeries<T> {
    /// Builds a series of order `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<T>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::EmptySeries);
        }
        Ok(Self { coeffs })
    }

    /// Builds a series of the given order from a (possibly shorter or longer)
    /// coefficient list, padding with zeros or dropping the excess.
    pub fn from_prefix(mut coeffs: Vec<T>, order: usize) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::EmptySeries);
        }
        coeffs.resize(order + 1, T::zero());
        Ok(Self { coeffs })
    }

    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![T::zero(); order + 1],
        }
    }

    /// The constant series `1`.
    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = T::one();
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of `x^k`.
    pub fn coeff(&self, k: usize) -> &T {
        &self.coeffs[k]
    }

    pub fn constant(&self) -> &T {
        &self.coeffs[0]
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(T::is_zero)
    }

    /// Re-truncates to a smaller (or equal) order.
    pub fn truncate(&self, order: usize) -> Self {
        assert!(
            order <= self.order(),
            "cannot truncate order {} up to {}",
            self.order(),
            order
        );
        Self {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() == other.order() {
            Ok(())
        } else {
            Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            })
        }
    }

    /// Truncated Cauchy product. Schoolbook convolution, `O(N^2)`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let n = self.order();
        let mut out = Self::zero(n);
        let mut term = T::zero();
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                term.clone_from(a);
                term *= b;
                out.coeffs[i + j] += &term;
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.clone() + b)
            .collect();
        Ok(Self { coeffs })
    }

    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    /// Multiplicative inverse modulo `x^{N+1}`.
    ///
    /// Requires `c_0 = ±1`, which is exactly when the inverse has integer
    /// coefficients.
    pub fn reciprocal(&self) -> Result<Self> {
        let c0_inv = self
            .constant()
            .unit_inverse()
            .ok_or_else(|| Error::NonUnitConstant(self.constant().to_string()))?;
        let n = self.order();
        let mut out = Self::zero(n);
        out.coeffs[0] = c0_inv.clone();
        let mut term = T::zero();
        for k in 1..=n {
            // g_k = -c0^{-1} * sum_{i=1..k} c_i g_{k-i}
            let mut acc = T::zero();
            for i in 1..=k {
                if self.coeffs[i].is_zero() {
                    continue;
                }
                term.clone_from(&self.coeffs[i]);
                term *= &out.coeffs[k - i];
                acc += &term;
            }
            acc *= &c0_inv;
            out.coeffs[k] = -acc;
        }
        Ok(out)
    }

    /// Formal derivative at the same order; the top coefficient, which would
    /// need `c_{N+1}`, is set to zero.
    pub fn derivative(&self) -> Self {
        let n = self.order();
        let mut out = Self::zero(n);
        for k in 0..n {
            out.coeffs[k] = T::from_index(k + 1) * &self.coeffs[k + 1];
        }
        out
    }

    /// Coefficients `L_1..L_N` of `-x f'(x) / f(x)`.
    ///
    /// The zeroed top coefficient of [`derivative`](Self::derivative) never
    /// reaches the result: multiplying by `-x` shifts it to `x^{N+1}`, so
    /// `L_N` is exact.
    pub fn neg_x_log_derivative(&self) -> Result<GhostSequence<T>> {
        if !self.constant().is_one() {
            return Err(Error::ConstantNotOne(self.constant().to_string()));
        }
        let n = self.order();
        let d = self.derivative();
        let mut shifted = Self::zero(n);
        for k in 1..=n {
            shifted.coeffs[k] = -d.coeffs[k - 1].clone();
        }
        let quotient = shifted.mul(&self.reciprocal()?)?;
        let mut values = quotient.coeffs;
        values.remove(0);
        Ok(GhostSequence::new(values))
    }
}
