//! Error type shared by every module of the crate.
//!
//! All arithmetic in this crate is exact: any operation that would wrap or
//! truncate reports [`Error::Overflow`] instead of silently producing a wrong
//! answer. The remaining variants are precondition violations, each carrying
//! enough context to name the offending parameters in diagnostics.

use std::fmt;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// An intermediate product, sum, or negation exceeded the scalar's range.
    #[error("integer overflow in exact arithmetic")]
    Overflow,

    /// A slope was given as 0/0, which names no curve.
    #[error("slope 0/0 is undefined")]
    ZeroZeroSlope,

    /// A basis-change matrix must have determinant +1 or -1.
    #[error("matrix [[{a}, {b}], [{c}, {d}]] has determinant {det}, expected \u{00b1}1")]
    NotUnimodular {
        a: String,
        b: String,
        c: String,
        d: String,
        det: String,
    },

    /// Cable-space parameters must be coprime with q >= 2.
    #[error("invalid cable-space parameters (p, q) = ({p}, {q}): {reason}")]
    InvalidCableSpace {
        p: String,
        q: String,
        reason: &'static str,
    },

    /// Horizontal-surface parameters (m, n) must be coprime with n >= 0.
    #[error("invalid horizontal parameters (m, n) = ({m}, {n}): {reason}")]
    InvalidHorizontalParams {
        m: String,
        n: String,
        reason: &'static str,
    },

    /// The one-bridge planar family requires distance exactly 1 from the fiber slope.
    #[error("slope {l}/{m} has distance {delta} from the fiber slope {p}/{q}, expected 1")]
    PlanarDistance {
        l: String,
        m: String,
        p: String,
        q: String,
        delta: String,
    },

    /// Covering degrees must be positive common multiples of the fiber orders.
    #[error("invalid covering degree {d}: {reason}")]
    InvalidCoverDegree { d: String, reason: &'static str },

    /// Fiber multiplicities must be at least 2.
    #[error("invalid fiber order {q}: must be at least 2")]
    InvalidFiberOrder { q: String },

    /// The knot parameters violate a structural invariant.
    #[error("invalid knot: {0}")]
    InvalidKnot(String),

    /// The knot is valid but fails the cabling-distance condition at some level.
    #[error("not admissible at level {level}: |{p} - {product}| = {distance}")]
    NotAdmissible {
        level: usize,
        p: String,
        product: String,
        distance: String,
    },

    /// A bridge spectrum must step down by at least one while positive and
    /// stay at zero afterwards.
    #[error("invalid bridge spectrum at index {index}: {reason}")]
    InvalidSpectrum { index: usize, reason: &'static str },

    /// A splitting ledger needs exactly one more thick level than thin levels.
    #[error("ledger shape mismatch: {thick} thick levels, {thin} thin levels (expected thin = thick - 1)")]
    LedgerShape { thick: usize, thin: usize },

    /// Amalgamating the ledger would produce a negative genus.
    #[error("amalgamated genus would be negative: thick genera sum to {thick_sum}, thin genera to {thin_sum}")]
    NegativeAmalgamation { thick_sum: String, thin_sum: String },

    /// Surface genera are nonnegative.
    #[error("genus {genus} is negative; splitting surfaces have nonnegative genus")]
    NegativeGenus { genus: String },

    /// Segment endpoints must satisfy 0 <= l <= m.
    #[error("invalid segment ({l}, {m}): need 0 <= l <= m")]
    SegmentOrder { l: String, m: String },

    /// The insertion position of a tower configuration must fit the segment
    /// and leave room for the configuration's pieces.
    #[error(
        "insertion position {i} does not fit segment ({l}, {m}) in this configuration: {reason}"
    )]
    InvalidInsertion {
        i: String,
        l: String,
        m: String,
        reason: &'static str,
    },

    /// A companion-level index must name a proper level of the knot.
    #[error("companion level {l} out of range for a knot with {levels} cabling levels")]
    CompanionLevel { l: usize, levels: usize },

    /// A closed surface has even Euler characteristic at most 2.
    #[error(
        "Euler characteristic {chi} is not of the form 2 - 2g for a closed orientable surface"
    )]
    NotClosedSurfaceChi { chi: String },
}

impl Error {
    /// Build [`Error::NotUnimodular`] from displayable entries.
    pub(crate) fn not_unimodular<S: fmt::Display>(a: S, b: S, c: S, d: S, det: S) -> Self {
        Error::NotUnimodular {
            a: a.to_string(),
            b: b.to_string(),
            c: c.to_string(),
            d: d.to_string(),
            det: det.to_string(),
        }
    }
}
