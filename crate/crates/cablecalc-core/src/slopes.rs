//! Slopes on a torus and unimodular changes of basis.
//!
//! A slope is an isotopy class of essential simple closed curves on a torus,
//! written as a reduced fraction `num/den` in a fixed meridian/longitude
//! basis. `1/0` is the meridian; slopes with `den = 1` are *integral*. The
//! distance [`delta`] between two slopes is their minimal geometric
//! intersection number `|ad - bc|`, and [`BasisChange`] carries slopes between
//! coordinate systems — in particular [`make_fill_basis_change`] produces the
//! basis change induced by regluing a solid torus along the curve `u/v`.
//!
//! All arithmetic is exact and overflow-checked; no floating point is ever
//! involved.
//!
//! # Examples
//!
//! ```
//! use cablecalc_core::slopes::{delta, normalize};
//!
//! let a = normalize(21i64, 4).unwrap();
//! let b = normalize(6i64, 1).unwrap();
//! assert_eq!(a.to_string(), "21/4");
//! assert!(b.is_integral());
//! assert_eq!(delta(&a, &b).unwrap(), 3);
//! ```

use std::fmt;

use serde::de::Deserializer;
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{
    checked_abs, checked_add, checked_gcd, checked_mul, checked_neg, checked_sub, Scalar,
};

/// A slope on a torus, stored in normalized form.
///
/// # Invariants
///
/// - `gcd(|num|, |den|) = 1`;
/// - `den >= 0`;
/// - `den = 0` implies `num = 1` (the meridian `1/0` is the only slope with
///   zero denominator).
///
/// Construction goes through [`normalize`] (or serde, which calls it), so a
/// value of this type always satisfies the invariants. Equality and hashing
/// are therefore exact equality of slopes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Slope<S: Scalar> {
    num: S,
    den: S,
}

impl<S: Scalar> Slope<S> {
    /// The meridian `1/0`.
    pub fn meridian() -> Self {
        Slope {
            num: S::one(),
            den: S::zero(),
        }
    }

    /// Numerator of the reduced fraction.
    pub fn num(&self) -> S {
        self.num
    }

    /// Denominator of the reduced fraction (always nonnegative).
    pub fn den(&self) -> S {
        self.den
    }

    /// An integral slope is one with denominator exactly 1.
    pub fn is_integral(&self) -> bool {
        self.den == S::one()
    }

    /// The meridian `1/0` is the unique slope with denominator 0.
    pub fn is_meridional(&self) -> bool {
        self.den.is_zero()
    }

    /// A slope of the form `1/n` for some integer `n` (numerator of absolute
    /// value 1 — `-1/4` counts, being `1/(-4)` before normalization).
    pub fn has_unit_numerator(&self) -> bool {
        self.num == S::one() || self.num == S::zero() - S::one()
    }
}

impl<S: Scalar> fmt::Display for Slope<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl<S: Scalar> Serialize for Slope<S> {
    fn serialize<T: Serializer>(&self, serializer: T) -> std::result::Result<T::Ok, T::Error> {
        (self.num, self.den).serialize(serializer)
    }
}

impl<'de, S: Scalar> Deserialize<'de> for Slope<S> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let (num, den) = <(S, S)>::deserialize(deserializer)?;
        normalize(num, den).map_err(serde::de::Error::custom)
    }
}

/// Reduce a fraction to the canonical slope it names.
///
/// Divides out the gcd, forces the denominator nonnegative, and sends every
/// `n/0` (with `n != 0`) to the meridian `1/0`.
///
/// # Errors
///
/// - [`Error::ZeroZeroSlope`] for the input `0/0`;
/// - [`Error::Overflow`] when sign normalization would overflow the scalar.
///
/// # Examples
///
/// ```
/// use cablecalc_core::slopes::normalize;
///
/// assert_eq!(normalize(6i64, 4).unwrap().to_string(), "3/2");
/// assert_eq!(normalize(-3i64, 0).unwrap().to_string(), "1/0");
/// assert_eq!(normalize(21i64, 4).unwrap().to_string(), "21/4");
/// assert!(normalize(0i64, 0).is_err());
/// ```
pub fn normalize<S: Scalar>(num: S, den: S) -> Result<Slope<S>> {
    if num.is_zero() && den.is_zero() {
        return Err(Error::ZeroZeroSlope);
    }
    let g = checked_gcd(num, den)?;
    let mut num = num / g;
    let mut den = den / g;
    if den < S::zero() {
        num = checked_neg(num)?;
        den = checked_neg(den)?;
    }
    if den.is_zero() {
        // gcd division already sent n/0 to (+-1)/0; fix the sign.
        num = S::one();
    }
    Ok(Slope { num, den })
}

/// Minimal geometric intersection number of two slopes: `|ad - bc|` for
/// `a/b` and `c/d`.
///
/// Symmetric, zero exactly on equal slopes, and invariant under any common
/// unimodular change of basis.
///
/// # Errors
///
/// [`Error::Overflow`] when the cross products exceed the scalar's range.
///
/// # Examples
///
/// ```
/// use cablecalc_core::slopes::{delta, normalize, Slope};
///
/// let s = normalize(21i64, 4).unwrap();
/// let t = normalize(6i64, 1).unwrap();
/// assert_eq!(delta(&s, &t).unwrap(), 3);
/// // Distance from the meridian is the denominator:
/// assert_eq!(delta(&Slope::meridian(), &s).unwrap(), 4);
/// ```
pub fn delta<S: Scalar>(a: &Slope<S>, b: &Slope<S>) -> Result<S> {
    let ad = checked_mul(a.num, b.den)?;
    let bc = checked_mul(a.den, b.num)?;
    checked_abs(checked_sub(ad, bc)?)
}

/// A unimodular change of torus basis, acting on slopes by
/// `num/den -> (a*num + b*den)/(c*num + d*den)`.
///
/// # Invariants
///
/// - `det = a*d - b*c` is exactly `+1` or `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct BasisChange<S: Scalar> {
    a: S,
    b: S,
    c: S,
    d: S,
}

impl<S: Scalar> BasisChange<S> {
    /// Build a basis change, verifying unimodularity.
    ///
    /// # Errors
    ///
    /// - [`Error::NotUnimodular`] when the determinant is not `+-1`;
    /// - [`Error::Overflow`] when the determinant itself overflows.
    pub fn new(a: S, b: S, c: S, d: S) -> Result<Self> {
        let det = checked_sub(checked_mul(a, d)?, checked_mul(b, c)?)?;
        if det != S::one() && det != S::zero() - S::one() {
            return Err(Error::not_unimodular(a, b, c, d, det));
        }
        Ok(BasisChange { a, b, c, d })
    }

    /// The identity basis change.
    pub fn identity() -> Self {
        BasisChange {
            a: S::one(),
            b: S::zero(),
            c: S::zero(),
            d: S::one(),
        }
    }

    /// Matrix entries in row-major order `(a, b, c, d)`.
    pub fn entries(&self) -> (S, S, S, S) {
        (self.a, self.b, self.c, self.d)
    }

    /// Exact determinant, `+1` or `-1` by construction.
    pub fn det(&self) -> S {
        // Construction verified the product; recompute without rechecking range.
        self.a * self.d - self.b * self.c
    }

    /// Matrix product `self * other` (apply `other` first, then `self`).
    ///
    /// # Errors
    ///
    /// [`Error::Overflow`] when an entry of the product overflows.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        let a = checked_add(checked_mul(self.a, other.a)?, checked_mul(self.b, other.c)?)?;
        let b = checked_add(checked_mul(self.a, other.b)?, checked_mul(self.b, other.d)?)?;
        let c = checked_add(checked_mul(self.c, other.a)?, checked_mul(self.d, other.c)?)?;
        let d = checked_add(checked_mul(self.c, other.b)?, checked_mul(self.d, other.d)?)?;
        BasisChange::new(a, b, c, d)
    }
}

/// Basis change induced by a Dehn filling with integral framing `u`, where
/// `v` picks the curve completing the new basis: the matrix
/// `[[v, 1 - u*v], [-1, u]]`, which sends the filling slope `u/1` to the new
/// meridian and has determinant exactly `+1`. On integral slopes it realizes
/// the surgery identity `l/1 -> (1 - v*(u - l)) / (u - l)`.
///
/// # Errors
///
/// [`Error::Overflow`] when `1 - u*v` overflows the scalar.
///
/// # Examples
///
/// ```
/// use cablecalc_core::slopes::make_fill_basis_change;
///
/// let m = make_fill_basis_change(2i64, 1).unwrap();
/// assert_eq!(m.entries(), (1, -1, -1, 2));
/// assert_eq!(m.det(), 1);
///
/// let m = make_fill_basis_change(5i64, -3).unwrap();
/// assert_eq!(m.entries(), (-3, 16, -1, 5));
/// ```
pub fn make_fill_basis_change<S: Scalar>(u: S, v: S) -> Result<BasisChange<S>> {
    let b = checked_sub(S::one(), checked_mul(u, v)?)?;
    BasisChange::new(v, b, checked_neg(S::one())?, u)
}

/// Apply a basis change to a slope and renormalize.
///
/// # Errors
///
/// [`Error::Overflow`] from the entry products; the image of a valid slope
/// under a unimodular matrix is never `0/0`.
///
/// # Examples
///
/// ```
/// use cablecalc_core::slopes::{apply_basis_change, make_fill_basis_change, normalize};
///
/// let m = make_fill_basis_change(2i64, 1).unwrap();
/// let s = normalize(0i64, 1).unwrap();
/// assert_eq!(apply_basis_change(&m, &s).unwrap().to_string(), "-1/2");
/// ```
pub fn apply_basis_change<S: Scalar>(m: &BasisChange<S>, s: &Slope<S>) -> Result<Slope<S>> {
    let num = checked_add(checked_mul(m.a, s.num)?, checked_mul(m.b, s.den)?)?;
    let den = checked_add(checked_mul(m.c, s.num)?, checked_mul(m.d, s.den)?)?;
    normalize(num, den)
}
