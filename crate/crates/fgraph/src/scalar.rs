//! Exact signed-integer scalar abstraction for index arithmetic.
//!
//! Every quantity in this crate (index values, closed-form evaluations,
//! deltas) is an exact integer; no floating point is used anywhere. The
//! computations are generic over the scalar so callers can trade headroom
//! for width: [`crate::IndexInt`] (`i64`) covers graphs up to around 10^5
//! edges with maximum degree 10^5 (largest single term d^3 <= 10^15, well
//! inside `i64`), while [`crate::IndexIntWide`] (`i128`) covers anything a
//! machine can hold in memory. All arithmetic is checked: an input that
//! exceeds the chosen scalar's headroom is rejected with [`Overflow`]
//! instead of wrapping.

use std::fmt;

use num_traits::{FromPrimitive, PrimInt, Signed};
use thiserror::Error;

/// Signed exact-integer scalar: `i64`, `i128`, or anything equivalent.
///
/// `PrimInt` supplies the checked arithmetic, `Signed` is required because
/// deltas (and intermediate terms of some closed forms) go negative.
pub trait IndexScalar: PrimInt + Signed + FromPrimitive + fmt::Display + fmt::Debug {}

impl<T> IndexScalar for T where T: PrimInt + Signed + FromPrimitive + fmt::Display + fmt::Debug {}

/// Checked arithmetic exceeded the scalar's range while computing `context`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("integer overflow while computing {0}; use a wider scalar type")]
pub struct Overflow(pub &'static str);

pub(crate) fn from_usize<T: IndexScalar>(v: usize, context: &'static str) -> Result<T, Overflow> {
    T::from_usize(v).ok_or(Overflow(context))
}

pub(crate) fn add<T: IndexScalar>(a: T, b: T, context: &'static str) -> Result<T, Overflow> {
    a.checked_add(&b).ok_or(Overflow(context))
}

pub(crate) fn sub<T: IndexScalar>(a: T, b: T, context: &'static str) -> Result<T, Overflow> {
    a.checked_sub(&b).ok_or(Overflow(context))
}

pub(crate) fn mul<T: IndexScalar>(a: T, b: T, context: &'static str) -> Result<T, Overflow> {
    a.checked_mul(&b).ok_or(Overflow(context))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn checked_helpers_reject_overflow() {
        assert_eq!(add(i64::MAX, 1i64, "t"), Err(Overflow("t")));
        assert_eq!(mul(i32::MAX, 2i32, "t"), Err(Overflow("t")));
        assert_eq!(add(1i64, 2, "t"), Ok(3));
        assert_eq!(sub(1i64, 2, "t"), Ok(-1));
    }

    #[test]
    fn from_usize_respects_width() {
        assert_eq!(from_usize::<i64>(7, "t"), Ok(7));
        assert!(from_usize::<i32>(usize::MAX, "t").is_err());
    }
}
