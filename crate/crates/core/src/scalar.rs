//! The coefficient ring shared by series, expansions and ghost sequences.

use std::fmt::{Debug, Display};
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{FromPrimitive, NumAssignRef, NumRef, Signed};

/// An exact signed integer type usable as a power-series coefficient.
///
/// `num_bigint::BigInt` is the intended instance. Fixed-width integers
/// also satisfy the bound and are handy for small hand-checked cases, but
/// coefficients of products and reciprocals grow exponentially with the
/// order, so anything beyond toy orders needs the big-integer aliases.
pub trait Coefficient:
    Clone
    + Debug
    + Display
    + FromStr
    + Integer
    + Signed
    + FromPrimitive
    + NumRef
    + NumAssignRef
    + Send
    + Sync
    + 'static
{
    /// The integer `k` as a coefficient.
    fn from_index(k: usize) -> Self {
        Self::from_usize(k).expect("index does not fit the coefficient type")
    }

    /// Inverse of a unit (`1` or `-1`); `None` for anything else.
    fn unit_inverse(&self) -> Option<Self> {
        if self.is_one() || (-self.clone()).is_one() {
            Some(self.clone())
        } else {
            None
        }
    }
}

impl<T> Coefficient for T where
    T: Clone
        + Debug
        + Display
        + FromStr
        + Integer
        + Signed
        + FromPrimitive
        + NumRef
        + NumAssignRef
        + Send
        + Sync
        + 'static
{
}

/// `base^exp` by repeated squaring.
pub(crate) fn power<T: Coefficient>(base: &T, exp: usize) -> T {
    num_traits::pow(base.clone(), exp)
}
