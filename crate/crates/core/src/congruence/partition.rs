//! The partition function `p(n)`, generated by `1 / ∏ (1 - x^k)`.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::product::ProductExpansion;
use crate::series::TruncatedSeries;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "PartitionRecord", into = "PartitionRecord")]
pub struct PartitionTable {
    values: Vec<BigInt>,
}

#[derive(Serialize, Deserialize)]
struct PartitionRecord {
    order: usize,
    #[serde(with = "crate::decimal::vec")]
    values: Vec<BigInt>,
}

impl TryFrom<PartitionRecord> for PartitionTable {
    type Error = Error;

    fn try_from(r: PartitionRecord) -> Result<Self> {
        if r.values.len() != r.order + 1 {
            return Err(Error::Malformed(format!(
                "order {} needs {} values, got {}",
                r.order,
                r.order + 1,
                r.values.len()
            )));
        }
        Ok(Self { values: r.values })
    }
}

impl From<PartitionTable> for PartitionRecord {
    fn from(t: PartitionTable) -> Self {
        PartitionRecord {
            order: t.order(),
            values: t.values,
        }
    }
}

impl PartitionTable {
    pub fn order(&self) -> usize {
        self.values.len() - 1
    }

    /// `p(0)..=p(N)`.
    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    pub fn get(&self, n: usize) -> &BigInt {
        &self.values[n]
    }
}

/// Generalized pentagonal numbers `j(3j-1)/2` and `j(3j+1)/2`, paired with
/// Euler's sign `(-1)^{j+1}`, for `j = 1, 2, ...` while they stay `<= n`.
fn pentagonal_terms(n: usize) -> impl Iterator<Item = (usize, bool)> {
    (1..)
        .map(|j: usize| (j, j * (3 * j - 1) / 2))
        .take_while(move |&(_, g)| g <= n)
        .flat_map(|(j, g)| {
            let positive = j % 2 == 1;
            [(g, positive), (g + j, positive)]
        })
}

/// `p(0)..=p(N)` by Euler's pentagonal recurrence
/// `p(n) = Σ_{j≥1} (-1)^{j+1} [p(n - j(3j-1)/2) + p(n - j(3j+1)/2)]`.
pub fn partition_numbers(order: usize) -> PartitionTable {
    let mut values: Vec<BigInt> = Vec::with_capacity(order + 1);
    values.push(BigInt::one());
    for n in 1..=order {
        let mut acc = BigInt::zero();
        for (g, positive) in pentagonal_terms(n) {
            if g > n {
                continue;
            }
            if positive {
                acc += &values[n - g];
            } else {
                acc -= &values[n - g];
            }
        }
        values.push(acc);
    }
    PartitionTable { values }
}

/// `∏_{k=1}^{N} (1 + ñ_k x^k)` where `ñ` is the sign-flipped inverse of the
/// all-ones exponent sequence. Should equal `Σ p(n) x^n` through `x^N`.
pub fn partitions_via_product(order: usize) -> TruncatedSeries<BigInt> {
    let tilde = ProductExpansion::<BigInt>::ones(order).inverse().tilde();
    plus_product(&tilde)
}

/// Multiplies out `∏ (1 + t_k x^k)`.
pub fn plus_product(t: &ProductExpansion<BigInt>) -> TruncatedSeries<BigInt> {
    t.tilde().to_series()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn table_examples() {
        assert_eq!(
            partition_numbers(5).values(),
            ints(&[1, 1, 2, 3, 5, 7]).as_slice()
        );
        assert_eq!(partition_numbers(10).get(10), &BigInt::from(42));
        assert_eq!(partition_numbers(0).values(), ints(&[1]).as_slice());
        assert_eq!(partition_numbers(100).get(100).to_string(), "190569292");
    }

    #[test]
    fn table_is_positive_and_non_decreasing() {
        let t = partition_numbers(200);
        assert!(t.values().iter().all(|v| *v > BigInt::zero()));
        assert!(t.values()[1..].windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn product_route_matches() {
        assert_eq!(
            partitions_via_product(20).coeffs(),
            partition_numbers(20).values()
        );
    }

    #[test]
    fn json_round_trip() {
        let t = partition_numbers(3);
        let json = serde_json::to_string(&t).unwrap();
        assert_eq!(json, r#"{"order":3,"values":["1","1","2","3"]}"#);
        assert_eq!(serde_json::from_str::<PartitionTable>(&json).unwrap(), t);
    }
}
