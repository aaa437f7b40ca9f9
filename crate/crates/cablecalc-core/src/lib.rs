//! Exact integer arithmetic for cabled knots and the surfaces in their
//! exteriors.
//!
//! The crate has five parts:
//!
//! - [`slopes`]: boundary slopes on a torus as reduced fractions, their
//!   intersection pairing, and unimodular changes of basis (including the
//!   ones induced by Dehn filling);
//! - [`cablespace`]: the cable space `C(p, q)`, its fiber slopes, and the
//!   classification of its essential surfaces into vertical, horizontal, and
//!   the two planar families, with boundary data and Euler characteristics;
//! - [`spectrum`]: iterated torus knots, their validity and admissibility,
//!   and their full bridge spectra — genus by genus — with gap structure,
//!   tunnel numbers, and the naive cabling upper bound;
//! - [`splittings`]: genus bookkeeping for generalized Heegaard splittings
//!   (amalgamation, untelescoped segments, Euler-characteristic assembly)
//!   and the forced-bridge lower bounds that pin the spectrum from below;
//! - [`scalar`] and [`error`]: the integer abstraction everything is generic
//!   over, and the shared error type. Every operation is checked; overflow
//!   is reported, never wrapped.
//!
//! All public types are generic over any signed integer via
//! [`scalar::Scalar`]; the crate root re-exports `i64` aliases for everyday
//! use.
//!
//! # Example
//!
//! ```
//! use cablecalc_core::spectrum::{bridge_spectrum, CablingParams, IteratedTorusKnot};
//!
//! let knot = IteratedTorusKnot::new(
//!     CablingParams::new(3i64, 2),
//!     vec![CablingParams::new(21, 4)],
//! );
//! assert_eq!(bridge_spectrum(&knot).unwrap().entries(), &[8, 3, 0]);
//! ```

pub mod cablespace;
pub mod error;
pub mod scalar;
pub mod slopes;
pub mod spectrum;
pub mod splittings;

pub use error::{Error, Result};

/// A boundary slope over `i64`.
pub type Slope = slopes::Slope<i64>;
/// A basis change over `i64`.
pub type BasisChange = slopes::BasisChange<i64>;
/// A cable space over `i64`.
pub type CableSpace = cablespace::CableSpace<i64>;
/// A classified surface over `i64`.
pub type SurfaceClass = cablespace::SurfaceClass<i64>;
/// A cabling parameter pair over `i64`.
pub type CablingParams = spectrum::CablingParams<i64>;
/// An iterated torus knot over `i64`.
pub type IteratedTorusKnot = spectrum::IteratedTorusKnot<i64>;
/// A bridge spectrum over `i64`.
pub type BridgeSpectrum = spectrum::BridgeSpectrum<i64>;
/// A spectrum gap over `i64`.
pub type GapReport = spectrum::GapReport<i64>;
/// A splitting ledger over `i64`.
pub type SplittingLedger = splittings::SplittingLedger<i64>;
