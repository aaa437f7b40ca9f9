//! The scalar abstraction the whole crate is generic over.
//!
//! Every quantity in this crate is an exact signed integer: slope coordinates,
//! intersection numbers, Euler characteristics, bridge numbers. [`Scalar`]
//! collects the bounds needed to do that arithmetic with overflow *checked*,
//! never wrapped — [`checked_add`](num_traits::CheckedAdd) and friends from
//! `num-traits`, plus ordering, hashing, and serde support for the wire
//! formats.
//!
//! The trait has a blanket implementation, so `i8`, `i16`, `i32`, `i64`, and
//! `i128` all qualify automatically. The crate root exports `i64`-backed
//! aliases for everyday use; the narrow widths are valuable in tests because
//! they make the overflow-error paths reachable with small inputs.
//!
//! # Examples
//!
//! ```
//! use cablecalc_core::scalar::{checked_abs, checked_gcd};
//!
//! assert_eq!(checked_abs(-7i64).unwrap(), 7);
//! assert_eq!(checked_gcd(12i64, -18i64).unwrap(), 6);
//! // |i8::MIN| does not fit in i8, so the checked form reports overflow:
//! assert!(checked_abs(i8::MIN).is_err());
//! ```

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_traits::{CheckedAdd, CheckedMul, CheckedNeg, CheckedSub, Signed};
use serde::de::DeserializeOwned;
use serde::Serialize;

use crate::error::{Error, Result};

/// A signed integer type usable as the crate's exact scalar.
///
/// # Invariants
///
/// - All ring operations are available in checked form; the crate never uses
///   wrapping arithmetic.
/// - `From<i8>` embeds the small constants the closed formulas need
///   (-14 through 2) into any scalar width.
pub trait Scalar:
    num_integer::Integer
    + Signed
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + CheckedNeg
    + From<i8>
    + Copy
    + Hash
    + Debug
    + Display
    + Serialize
    + DeserializeOwned
    + Send
    + Sync
    + 'static
{
}

impl<T> Scalar for T where
    T: num_integer::Integer
        + Signed
        + CheckedAdd
        + CheckedSub
        + CheckedMul
        + CheckedNeg
        + From<i8>
        + Copy
        + Hash
        + Debug
        + Display
        + Serialize
        + DeserializeOwned
        + Send
        + Sync
        + 'static
{
}

/// `a + b`, or [`Error::Overflow`].
pub fn checked_add<S: Scalar>(a: S, b: S) -> Result<S> {
    a.checked_add(&b).ok_or(Error::Overflow)
}

/// `a - b`, or [`Error::Overflow`].
pub fn checked_sub<S: Scalar>(a: S, b: S) -> Result<S> {
    a.checked_sub(&b).ok_or(Error::Overflow)
}

/// `a * b`, or [`Error::Overflow`].
pub fn checked_mul<S: Scalar>(a: S, b: S) -> Result<S> {
    a.checked_mul(&b).ok_or(Error::Overflow)
}

/// `-a`, or [`Error::Overflow`] (two's-complement minima have no negation).
pub fn checked_neg<S: Scalar>(a: S) -> Result<S> {
    a.checked_neg().ok_or(Error::Overflow)
}

/// `|a|`, or [`Error::Overflow`] when the absolute value is unrepresentable.
pub fn checked_abs<S: Scalar>(a: S) -> Result<S> {
    if a < S::zero() {
        checked_neg(a)
    } else {
        Ok(a)
    }
}

/// Greatest common divisor by the Euclidean algorithm, always nonnegative,
/// with the sign handling checked. `checked_gcd(0, 0) = 0`.
pub fn checked_gcd<S: Scalar>(a: S, b: S) -> Result<S> {
    let mut a = checked_abs(a)?;
    let mut b = checked_abs(b)?;
    while !b.is_zero() {
        let r = a % b;
        a = b;
        b = r;
    }
    Ok(a)
}

/// `|a - b|` in one checked step, used for cabling distances.
pub fn checked_abs_diff<S: Scalar>(a: S, b: S) -> Result<S> {
    checked_abs(checked_sub(a, b)?)
}
