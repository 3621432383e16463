//! Divisor-sum transform between product exponents and log-derivative
//! coefficients.
//!
//! For `f = ∏ (1 - m_k x^k)`,
//!
//! ```text
//! -x f'(x)/f(x) = Σ_k k m_k x^k / (1 - m_k x^k) = Σ_N L_N x^N,
//! L_N = Σ_{d | N} d · m_d^{N/d}.
//! ```
//!
//! We call `L_1, L_2, ...` the ghost sequence of `m`. Because the log
//! derivative turns products into sums, the ghosts of `f` and `1/f` are
//! negatives of each other, which is the reciprocal identity checked by
//! [`verify_reciprocal_identity`].

use std::ops::Neg;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::product::ProductExpansion;
use crate::scalar::{power, Coefficient};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(
    try_from = "GhostRecord<T>",
    into = "GhostRecord<T>",
    bound = "T: Coefficient"
)]
pub struct GhostSequence<T> {
    // values[n - 1] = L_n
    values: Vec<T>,
}

/// Wire form: `{"order": N, "values": ["L_1", ..., "L_N"]}`.
#[derive(Serialize, Deserialize)]
#[serde(bound = "T: Coefficient")]
struct GhostRecord<T> {
    order: usize,
    #[serde(with = "crate::decimal::vec")]
    values: Vec<T>,
}

impl<T: Coefficient> TryFrom<GhostRecord<T>> for GhostSequence<T> {
    type Error = Error;

    fn try_from(record: GhostRecord<T>) -> Result<Self> {
        if record.values.len() != record.order {
            return Err(Error::Malformed(format!(
                "order {} needs {} values, got {}",
                record.order,
                record.order,
                record.values.len()
            )));
        }
        Ok(Self::new(record.values))
    }
}

impl<T: Coefficient> From<GhostSequence<T>> for GhostRecord<T> {
    fn from(g: GhostSequence<T>) -> Self {
        GhostRecord {
            order: g.order(),
            values: g.values,
        }
    }
}

impl<T: Coefficient> GhostSequence<T> {
    /// `values[0]` is `L_1`.
    pub fn new(values: Vec<T>) -> Self {
        Self { values }
    }

    pub fn order(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn into_values(self) -> Vec<T> {
        self.values
    }

    /// `L_n`, 1-based.
    pub fn value(&self, n: usize) -> &T {
        assert!(
            n >= 1 && n <= self.order(),
            "ghost index {n} outside 1..={}",
            self.order()
        );
        &self.values[n - 1]
    }

    pub fn from_exponents(m: &ProductExpansion<T>) -> Self {
        let values = (1..=m.order())
            .map(|n| divisor_sum(m.exponents(), n, None))
            .collect();
        Self { values }
    }

    /// Solves `L_N = Σ_{d|N} d · m_d^{N/d}` for `m_N`, in increasing `N`.
    ///
    /// Fails at the first `N` where `L_N` minus the proper-divisor terms is not
    /// divisible by `N`; such an `L` is not the ghost of any integer product.
    pub fn to_exponents(&self) -> Result<ProductExpansion<T>> {
        let mut exponents: Vec<T> = Vec::with_capacity(self.order());
        for (i, l_n) in self.values.iter().enumerate() {
            let n = i + 1;
            let lower = divisor_sum(&exponents, n, Some(n));
            let numerator = l_n.clone() - lower;
            let (q, r) = numerator.div_mod_floor(&T::from_index(n));
            if !r.is_zero() {
                return Err(Error::NotRealizable {
                    index: n,
                    remainder: r.to_string(),
                });
            }
            exponents.push(q);
        }
        Ok(ProductExpansion::new(exponents))
    }
}

impl<T: Coefficient> Neg for GhostSequence<T> {
    type Output = Self;

    fn neg(self) -> Self {
        Self::new(self.values.into_iter().map(|v| -v).collect())
    }
}

/// `Σ_{d | n, d != skip} d · m_d^{n/d}` where `m[d - 1] = m_d`.
fn divisor_sum<T: Coefficient>(m: &[T], n: usize, skip: Option<usize>) -> T {
    let mut acc = T::zero();
    for d in divisors(n) {
        if Some(d) == skip || m[d - 1].is_zero() {
            continue;
        }
        acc += &(T::from_index(d) * power(&m[d - 1], n / d));
    }
    acc
}

/// Divisors of `n` in increasing order, by trial division up to `√n`.
pub fn divisors(n: usize) -> Vec<usize> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub fn ghost_from_exponents<T: Coefficient>(m: &ProductExpansion<T>) -> GhostSequence<T> {
    GhostSequence::from_exponents(m)
}

pub fn exponents_from_ghost<T: Coefficient>(l: &GhostSequence<T>) -> Result<ProductExpansion<T>> {
    l.to_exponents()
}

/// For each `N`, whether `ghost(m)_N = -ghost(n)_N`.
///
/// All entries are true exactly when the two products multiply to 1 through
/// the common order.
pub fn verify_reciprocal_identity<T: Coefficient>(
    m: &ProductExpansion<T>,
    n: &ProductExpansion<T>,
) -> Result<Vec<bool>> {
    if m.order() != n.order() {
        return Err(Error::OrderMismatch {
            left: m.order(),
            right: n.order(),
        });
    }
    let lm = GhostSequence::from_exponents(m);
    let ln = GhostSequence::from_exponents(n);
    Ok(lm
        .values()
        .iter()
        .zip(ln.values())
        .map(|(a, b)| (a.clone() + b).is_zero())
        .collect())
}
