//! The integer scalar the counting formulas are generic over.
//!
//! Every formula in [`crate::formulas`] is written once against
//! [`ExactScalar`]. Instantiating it with [`crate::ExactInt`] gives exact
//! results for any `n`; instantiating it with `u64` or `u128` gives a fast
//! path that reports [`Error::Overflow`] instead of wrapping.

use std::fmt::{Debug, Display};

use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, FromPrimitive};

use crate::error::{Error, Result};

pub trait ExactScalar:
    Integer
    + Clone
    + Debug
    + Display
    + FromPrimitive
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + Send
    + Sync
    + 'static
{
}

impl<T> ExactScalar for T where
    T: Integer
        + Clone
        + Debug
        + Display
        + FromPrimitive
        + CheckedAdd
        + CheckedSub
        + CheckedMul
        + Send
        + Sync
        + 'static
{
}

pub(crate) fn lift<T: ExactScalar>(v: u64, what: &'static str) -> Result<T> {
    T::from_u64(v).ok_or(Error::Overflow { what })
}

pub(crate) fn add<T: ExactScalar>(a: &T, b: &T, what: &'static str) -> Result<T> {
    a.checked_add(b).ok_or(Error::Overflow { what })
}

pub(crate) fn sub<T: ExactScalar>(a: &T, b: &T, what: &'static str) -> Result<T> {
    a.checked_sub(b).ok_or(Error::Overflow { what })
}

pub(crate) fn mul<T: ExactScalar>(a: &T, b: &T, what: &'static str) -> Result<T> {
    a.checked_mul(b).ok_or(Error::Overflow { what })
}

pub(crate) fn mul_u64<T: ExactScalar>(a: &T, b: u64, what: &'static str) -> Result<T> {
    mul(a, &lift(b, what)?, what)
}

/// `num / den`, failing unless the remainder is zero.
pub(crate) fn exact_div<T: ExactScalar>(num: &T, den: &T, what: &'static str) -> Result<T> {
    let (q, r) = num.div_rem(den);
    if r.is_zero() {
        Ok(q)
    } else {
        Err(Error::InexactDivision {
            what,
            divisor: den.to_string(),
            remainder: r.to_string(),
        })
    }
}

pub(crate) fn sum<'a, T: ExactScalar>(
    items: impl IntoIterator<Item = &'a T>,
    what: &'static str,
) -> Result<T> {
    items
        .into_iter()
        .try_fold(T::zero(), |acc, x| add(&acc, x, what))
}

/// `2^k`.
pub fn pow2<T: ExactScalar>(k: u32) -> Result<T> {
    num_traits::checked_pow(lift::<T>(2, "pow2")?, k as usize)
        .ok_or(Error::Overflow { what: "pow2" })
}

/// Binomial coefficient `C(n, k)`, zero when `k > n`.
///
/// Uses the running product `C(n-k+i, i)`, which is an integer at every step.
pub fn binomial<T: ExactScalar>(n: u64, k: u64) -> Result<T> {
    if k > n {
        return Ok(T::zero());
    }
    let k = k.min(n - k);
    let mut acc = T::one();
    for i in 1..=k {
        acc = mul_u64(&acc, n - k + i, "binomial")?;
        acc = exact_div(&acc, &lift(i, "binomial")?, "binomial")?;
    }
    Ok(acc)
}

/// Binomial coefficient with signed upper argument; zero when `n < 0` or `k < 0`.
///
/// Several closed forms use floors such as `(n - 3) / 4` that go negative for
/// small `n`. Those terms vanish.
pub fn binomial_signed<T: ExactScalar>(n: i64, k: i64) -> Result<T> {
    if n < 0 || k < 0 {
        Ok(T::zero())
    } else {
        binomial(n as u64, k as u64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ExactInt;

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial::<u64>(5, 2).unwrap(), 10);
        assert_eq!(binomial::<u64>(0, 0).unwrap(), 1);
        assert_eq!(binomial::<u64>(3, 4).unwrap(), 0);
        assert_eq!(binomial::<u64>(60, 30).unwrap(), 118_264_581_564_861_424);
    }

    #[test]
    fn binomial_reports_overflow_on_narrow_types() {
        assert!(matches!(
            binomial::<u8>(20, 10),
            Err(Error::Overflow { .. })
        ));
        assert_eq!(
            binomial::<ExactInt>(100, 50).unwrap().to_string(),
            "100891344545564193334812497256"
        );
    }

    #[test]
    fn pow2_overflow() {
        assert_eq!(pow2::<u64>(63).unwrap(), 1 << 63);
        assert!(pow2::<u64>(64).is_err());
        assert_eq!(
            pow2::<ExactInt>(64).unwrap().to_string(),
            "18446744073709551616"
        );
    }

    #[test]
    fn exact_div_rejects_remainder() {
        assert_eq!(exact_div(&12u64, &4, "t").unwrap(), 3);
        assert!(matches!(
            exact_div(&13u64, &4, "t"),
            Err(Error::InexactDivision { .. })
        ));
    }

    #[test]
    fn signed_binomial_vanishes_below_zero() {
        assert_eq!(binomial_signed::<u64>(-1, 0).unwrap(), 0);
        assert_eq!(binomial_signed::<u64>(4, -1).unwrap(), 0);
        assert_eq!(binomial_signed::<u64>(4, 2).unwrap(), 6);
    }
}
