//! Iterated torus knots and their bridge spectra.
//!
//! An iterated torus knot is described by a list of coprime pairs
//! `((p0, q0), (p1, q1), ..., (pn, qn))`: start with the `(p0, q0)` torus
//! knot and repeatedly take the `(p_i, q_i)` cable. A description is *valid*
//! when every pair is coprime with `q_i >= 2` and `|p0| >= 2`, and
//! *admissible* when additionally every cabling slope stays at distance more
//! than 1 from the previous inner fiber slope:
//! `|p_i - p_{i-1} * q_{i-1} * q_i| > 1` for every `i >= 1`.
//!
//! The *bridge spectrum* of a knot lists, for each genus `g`, the minimal
//! bridge number of the knot with respect to a genus-`g` splitting of the
//! 3-sphere. For admissible iterated torus knots it is computed exactly by
//! the recursion in [`bridge_spectrum`]; [`closed_form_b0`] gives the genus-0
//! entry by an independent product formula, [`gaps`] reports where the
//! spectrum drops by more than the generic single step, and
//! [`tunnel_number`] / [`h_genus`] locate the first zero.
//!
//! # Examples
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

use std::fmt;

use serde::de::Deserializer;
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{checked_abs, checked_abs_diff, checked_gcd, checked_mul, Scalar};

/// One cabling level: the coprime pair `(p, q)`.
///
/// Serialized as the two-element array `[p, q]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CablingParams<S: Scalar> {
    /// Winding in the fiber direction.
    pub p: S,
    /// Winding around the companion.
    pub q: S,
}

impl<S: Scalar> CablingParams<S> {
    /// Package a pair; validity is checked by [`validate`] and the spectrum
    /// operations, not at construction.
    pub fn new(p: S, q: S) -> Self {
        CablingParams { p, q }
    }
}

impl<S: Scalar> fmt::Display for CablingParams<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

impl<S: Scalar> Serialize for CablingParams<S> {
    fn serialize<T: Serializer>(&self, serializer: T) -> std::result::Result<T::Ok, T::Error> {
        (self.p, self.q).serialize(serializer)
    }
}

impl<'de, S: Scalar> Deserialize<'de> for CablingParams<S> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let (p, q) = <(S, S)>::deserialize(deserializer)?;
        Ok(CablingParams { p, q })
    }
}

/// An iterated torus knot: a base torus-knot pair plus a tower of cabling
/// levels, possibly empty.
///
/// Serialized as `{"base": [p, q], "cables": [[p, q], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(bound = "")]
pub struct IteratedTorusKnot<S: Scalar> {
    base: CablingParams<S>,
    cables: Vec<CablingParams<S>>,
}

impl<S: Scalar> IteratedTorusKnot<S> {
    /// Package a description; validity is checked by [`validate`] and the
    /// spectrum operations, not at construction.
    pub fn new(base: CablingParams<S>, cables: Vec<CablingParams<S>>) -> Self {
        IteratedTorusKnot { base, cables }
    }

    /// The base torus-knot pair `(p0, q0)`.
    pub fn base(&self) -> CablingParams<S> {
        self.base
    }

    /// The cabling levels `(p1, q1), ..., (pn, qn)` in order.
    pub fn cables(&self) -> &[CablingParams<S>] {
        &self.cables
    }

    /// Number of cabling levels `n` (0 for a plain torus knot).
    pub fn depth(&self) -> usize {
        self.cables.len()
    }

    /// The pair at a given level, level 0 being the base.
    ///
    /// # Panics
    ///
    /// Panics when `level > depth()`.
    pub fn level(&self, level: usize) -> CablingParams<S> {
        if level == 0 {
            self.base
        } else {
            self.cables[level - 1]
        }
    }

    /// The knot with the last cabling level removed; `None` at depth 0.
    pub fn prefix(&self) -> Option<Self> {
        let mut cables = self.cables.clone();
        cables.pop()?;
        Some(IteratedTorusKnot {
            base: self.base,
            cables,
        })
    }
}

impl<S: Scalar> fmt::Display for IteratedTorusKnot<S> {
    /// The inline descriptor form `(p0,q0),(p1,q1),...`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.base)?;
        for cable in &self.cables {
            write!(f, ",{cable}")?;
        }
        Ok(())
    }
}

/// Outcome of checking a knot description against the structural and
/// admissibility rules.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    /// Every pair coprime, every `q >= 2`, and `|p0| >= 2`.
    pub valid: bool,
    /// Valid, and every cabling level at distance more than 1.
    pub admissible: bool,
    /// Human-readable rule violations, in level order.
    pub violations: Vec<String>,
}

/// Check a knot description, reporting every violated rule.
///
/// Admissibility is only assessed for valid descriptions; an invalid one
/// reports `admissible: false` with the validity violations.
///
/// # Errors
///
/// [`Error::Overflow`] when an admissibility product exceeds the scalar.
///
/// # Examples
///
/// ```
/// use cablecalc_core::spectrum::{validate, CablingParams, IteratedTorusKnot};
///
/// let knot = IteratedTorusKnot::new(
///     CablingParams::new(3i64, 2),
///     vec![CablingParams::new(25, 4)],
/// );
/// let report = validate(&knot).unwrap();
/// assert!(report.valid && !report.admissible);
/// assert_eq!(report.violations.len(), 1);
/// ```
pub fn validate<S: Scalar>(knot: &IteratedTorusKnot<S>) -> Result<ValidationReport> {
    let two = S::from(2i8);
    let mut violations = Vec::new();

    let base = knot.base();
    if checked_abs(base.p)? < two {
        violations.push(format!("base: |p| must be at least 2, got {}", base.p));
    }
    for level in 0..=knot.depth() {
        let pair = knot.level(level);
        let name = if level == 0 {
            "base".to_string()
        } else {
            format!("level {level}")
        };
        if pair.q < two {
            violations.push(format!("{name}: q must be at least 2, got {}", pair.q));
        }
        if checked_gcd(pair.p, pair.q)? != S::one() {
            violations.push(format!(
                "{name}: p and q must be coprime, got ({},{})",
                pair.p, pair.q
            ));
        }
    }

    let valid = violations.is_empty();
    let mut admissible = valid;
    if valid {
        for level in 1..=knot.depth() {
            let distance = cabling_distance(knot, level)?;
            if distance <= S::one() {
                let prev = knot.level(level - 1);
                let pair = knot.level(level);
                let product = checked_mul(checked_mul(prev.p, prev.q)?, pair.q)?;
                violations.push(format!(
                    "level {level}: cabling distance |{} - {}| = {} is not greater than 1",
                    pair.p, product, distance
                ));
                admissible = false;
            }
        }
    }

    Ok(ValidationReport {
        valid,
        admissible,
        violations,
    })
}

/// Distance of the level-`i` cabling slope from the previous inner fiber
/// slope: `|p_i - p_{i-1} * q_{i-1} * q_i|` for `1 <= i <= depth()`.
///
/// This equals the intersection number of the slopes `p_i / q_i` and
/// `p_{i-1} * q_{i-1} / 1`.
///
/// # Errors
///
/// [`Error::Overflow`] when the triple product exceeds the scalar;
/// [`Error::CompanionLevel`] when `level` is 0 or out of range.
pub fn cabling_distance<S: Scalar>(knot: &IteratedTorusKnot<S>, level: usize) -> Result<S> {
    if level == 0 || level > knot.depth() {
        return Err(Error::CompanionLevel {
            l: level,
            levels: knot.depth(),
        });
    }
    let prev = knot.level(level - 1);
    let pair = knot.level(level);
    let product = checked_mul(checked_mul(prev.p, prev.q)?, pair.q)?;
    checked_abs_diff(pair.p, product)
}

/// Bridge number of the `(p, q)` torus knot on a sphere: `min(|p|, q)`.
///
/// # Errors
///
/// [`Error::InvalidKnot`] unless `|p| >= 2`, `q >= 2`, and `gcd(p, q) = 1`.
pub fn torus_bridge_number<S: Scalar>(p: S, q: S) -> Result<S> {
    let two = S::from(2i8);
    let p_abs = checked_abs(p)?;
    if p_abs < two || q < two || checked_gcd(p, q)? != S::one() {
        return Err(Error::InvalidKnot(format!(
            "torus-knot parameters ({p}, {q}): need |p| >= 2, q >= 2, gcd(p, q) = 1"
        )));
    }
    Ok(if p_abs < q { p_abs } else { q })
}

/// A bridge spectrum: bridge numbers indexed by splitting genus, ending in a
/// trailing zero.
///
/// # Invariants
///
/// - nonempty, with every entry nonnegative and the last entry zero;
/// - strictly descending by at least 1 while positive
///   (`b_{g+1} <= b_g - 1` whenever `b_g > 0`);
/// - once zero, zero forever (exactly one transition to zero).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BridgeSpectrum<S: Scalar> {
    entries: Vec<S>,
}

impl<S: Scalar> BridgeSpectrum<S> {
    /// Validate and wrap a list of entries.
    ///
    /// # Errors
    ///
    /// [`Error::InvalidSpectrum`] naming the first offending index.
    pub fn new(entries: Vec<S>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidSpectrum {
                index: 0,
                reason: "spectrum must be nonempty",
            });
        }
        if !entries[entries.len() - 1].is_zero() {
            return Err(Error::InvalidSpectrum {
                index: entries.len() - 1,
                reason: "spectrum must end in zero",
            });
        }
        for (g, window) in entries.windows(2).enumerate() {
            let (a, b) = (window[0], window[1]);
            if a < S::zero() || b < S::zero() {
                return Err(Error::InvalidSpectrum {
                    index: g + 1,
                    reason: "entries must be nonnegative",
                });
            }
            if a.is_zero() {
                if !b.is_zero() {
                    return Err(Error::InvalidSpectrum {
                        index: g + 1,
                        reason: "entries must stay zero after the first zero",
                    });
                }
            } else if b > a - S::one() {
                return Err(Error::InvalidSpectrum {
                    index: g + 1,
                    reason: "positive entries must descend by at least 1",
                });
            }
        }
        Ok(BridgeSpectrum { entries })
    }

    /// The entries `(b_0, ..., b_m)`.
    pub fn entries(&self) -> &[S] {
        &self.entries
    }

    /// Entry at a genus, extending by zero beyond the stored range.
    pub fn get(&self, genus: usize) -> S {
        self.entries.get(genus).copied().unwrap_or_else(S::zero)
    }

    /// Index of the first zero entry.
    pub fn first_zero_index(&self) -> usize {
        self.entries
            .iter()
            .position(|e| e.is_zero())
            .expect("validated spectra end in zero")
    }
}

impl<S: Scalar> Serialize for BridgeSpectrum<S> {
    fn serialize<T: Serializer>(&self, serializer: T) -> std::result::Result<T::Ok, T::Error> {
        self.entries.serialize(serializer)
    }
}

/// One cabling step of the bridge-spectrum recursion: scale the companion's
/// positive entries by `q`, append `min(pstar, q)` at the new top genus, and
/// close with the trailing zero.
///
/// `prefix_entries` must be the companion's spectrum `(b_0, ..., b_{n-1}, 0)`;
/// `pstar` is the [`cabling_distance`] at the new level.
///
/// # Errors
///
/// [`Error::Overflow`] when scaling exceeds the scalar's range.
pub fn cable_spectrum_step<S: Scalar>(prefix_entries: &[S], q: S, pstar: S) -> Result<Vec<S>> {
    let top = prefix_entries.len() - 1; // index of the companion's trailing zero
    let mut entries = Vec::with_capacity(prefix_entries.len() + 1);
    for &b in &prefix_entries[..top] {
        entries.push(checked_mul(q, b)?);
    }
    entries.push(if pstar < q { pstar } else { q });
    entries.push(S::zero());
    Ok(entries)
}

fn require_valid<S: Scalar>(knot: &IteratedTorusKnot<S>) -> Result<()> {
    let report = validate(knot)?;
    if !report.valid {
        return Err(Error::InvalidKnot(report.violations.join("; ")));
    }
    Ok(())
}

fn require_admissible_through<S: Scalar>(knot: &IteratedTorusKnot<S>, levels: usize) -> Result<()> {
    for level in 1..=levels {
        let distance = cabling_distance(knot, level)?;
        if distance <= S::one() {
            let prev = knot.level(level - 1);
            let pair = knot.level(level);
            let product = checked_mul(checked_mul(prev.p, prev.q)?, pair.q)?;
            return Err(Error::NotAdmissible {
                level,
                p: pair.p.to_string(),
                product: product.to_string(),
                distance: distance.to_string(),
            });
        }
    }
    Ok(())
}

/// The exact bridge spectrum of a valid, admissible iterated torus knot.
///
/// Computed by the cabling recursion: the base `(p0, q0)` torus knot has
/// spectrum `(min(|p0|, q0), 0)`, and each cabling level multiplies the
/// entries below the new top genus by `q_n`, contributes
/// `min(pstar_n, q_n)` at genus `n` (where `pstar_n` is the
/// [`cabling_distance`]), and stays zero above.
///
/// # Errors
///
/// - [`Error::InvalidKnot`] for invalid descriptions;
/// - [`Error::NotAdmissible`] naming the first level at distance <= 1;
/// - [`Error::Overflow`] on scalar overflow.
///
/// # Examples
///
/// ```
/// use cablecalc_core::spectrum::{bridge_spectrum, CablingParams, IteratedTorusKnot};
///
/// let knot = IteratedTorusKnot::new(
///     CablingParams::new(3i64, 2),
///     vec![CablingParams::new(21, 4), CablingParams::new(171, 2)],
/// );
/// assert_eq!(bridge_spectrum(&knot).unwrap().entries(), &[16, 6, 2, 0]);
/// ```
pub fn bridge_spectrum<S: Scalar>(knot: &IteratedTorusKnot<S>) -> Result<BridgeSpectrum<S>> {
    require_valid(knot)?;
    require_admissible_through(knot, knot.depth())?;
    let base = knot.base();
    let mut entries = vec![torus_bridge_number(base.p, base.q)?, S::zero()];
    for level in 1..=knot.depth() {
        let pstar = cabling_distance(knot, level)?;
        entries = cable_spectrum_step(&entries, knot.level(level).q, pstar)?;
    }
    BridgeSpectrum::new(entries)
}

/// Genus-0 bridge number by the closed product formula, independent of the
/// spectrum recursion: `min(|p0|, q0) * q1 * q2 * ... * qn`.
///
/// Requires validity only; admissibility is irrelevant to this value.
///
/// # Errors
///
/// [`Error::InvalidKnot`] or [`Error::Overflow`].
///
/// # Examples
///
/// ```
/// use cablecalc_core::spectrum::{closed_form_b0, CablingParams, IteratedTorusKnot};
///
/// let knot = IteratedTorusKnot::new(
///     CablingParams::new(3i64, 2),
///     vec![CablingParams::new(21, 4)],
/// );
/// assert_eq!(closed_form_b0(&knot).unwrap(), 8);
/// ```
pub fn closed_form_b0<S: Scalar>(knot: &IteratedTorusKnot<S>) -> Result<S> {
    require_valid(knot)?;
    let base = knot.base();
    let mut value = torus_bridge_number(base.p, base.q)?;
    for cable in knot.cables() {
        value = checked_mul(value, cable.q)?;
    }
    Ok(value)
}

/// A spot where the spectrum drops faster than the generic single step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GapReport<S: Scalar> {
    /// Genus at which the drop lands (always >= 1).
    pub index: usize,
    /// Size of the drop `b_{index-1} - b_index` (always >= 2).
    pub order: S,
}

/// All gaps of a spectrum: indices `g >= 1` with `b_g < b_{g-1} - 1`,
/// reported in ascending order with their drop sizes. Indices past the first
/// zero are never reported.
///
/// # Examples
///
/// ```
/// use cablecalc_core::spectrum::{bridge_spectrum, gaps, CablingParams, IteratedTorusKnot};
///
/// let knot = IteratedTorusKnot::new(
///     CablingParams::new(3i64, 2),
///     vec![CablingParams::new(21, 4)],
/// );
/// let spectrum = bridge_spectrum(&knot).unwrap();
/// let reported = gaps(&spectrum);
/// assert_eq!(reported.len(), 2);
/// assert_eq!((reported[0].index, reported[0].order), (1, 5));
/// assert_eq!((reported[1].index, reported[1].order), (2, 3));
/// ```
pub fn gaps<S: Scalar>(spectrum: &BridgeSpectrum<S>) -> Vec<GapReport<S>> {
    let entries = spectrum.entries();
    let mut reports = Vec::new();
    for g in 1..entries.len() {
        let prev = entries[g - 1];
        if prev.is_zero() {
            break;
        }
        let drop = prev - entries[g];
        if drop > S::one() {
            reports.push(GapReport {
                index: g,
                order: drop,
            });
        }
    }
    reports
}

/// Tunnel number of a valid, admissible iterated torus knot with `n` cabling
/// levels: exactly `n + 1`.
///
/// # Errors
///
/// [`Error::InvalidKnot`], [`Error::NotAdmissible`], or [`Error::Overflow`].
pub fn tunnel_number<S: Scalar>(knot: &IteratedTorusKnot<S>) -> Result<usize> {
    require_valid(knot)?;
    require_admissible_through(knot, knot.depth())?;
    Ok(knot.depth() + 1)
}

/// Smallest splitting genus at which the knot sits with zero bridges (the
/// index of the first zero spectrum entry): `n + 1`, the tunnel number.
///
/// # Errors
///
/// [`Error::InvalidKnot`], [`Error::NotAdmissible`], or [`Error::Overflow`].
pub fn h_genus<S: Scalar>(knot: &IteratedTorusKnot<S>) -> Result<usize> {
    tunnel_number(knot)
}

/// The naive upper-bound spectrum: cable the companion's exact spectrum,
/// charging `q_n * b_g` below the top genus and only the generic `q_n` at
/// genus `n`, then close under the single-step staircase rule
/// (`b_{g+1} <= max(b_g - 1, 0)`).
///
/// Dominates [`bridge_spectrum`] entrywise, with equality everywhere except
/// possibly at genus `n`.
///
/// # Errors
///
/// - [`Error::InvalidKnot`] for invalid descriptions;
/// - [`Error::NotAdmissible`] when a level *below* the top is at distance
///   <= 1 (the companion's exact spectrum is what gets cabled, so it must
///   exist; the top level's own distance never enters);
/// - [`Error::Overflow`] on scalar overflow.
///
/// # Examples
///
/// ```
/// use cablecalc_core::spectrum::{naive_upper_spectrum, CablingParams, IteratedTorusKnot};
///
/// let knot = IteratedTorusKnot::new(
///     CablingParams::new(3i64, 2),
///     vec![CablingParams::new(21, 4)],
/// );
/// assert_eq!(naive_upper_spectrum(&knot).unwrap().entries(), &[8, 4, 0]);
/// ```
pub fn naive_upper_spectrum<S: Scalar>(knot: &IteratedTorusKnot<S>) -> Result<BridgeSpectrum<S>> {
    require_valid(knot)?;
    let n = knot.depth();
    if n == 0 {
        let base = knot.base();
        return BridgeSpectrum::new(vec![torus_bridge_number(base.p, base.q)?, S::zero()]);
    }
    require_admissible_through(knot, n - 1)?;
    let prefix = knot.prefix().expect("depth >= 1");
    let companion = bridge_spectrum(&prefix)?;
    let q = knot.level(n).q;

    let mut entries = Vec::with_capacity(n + 2);
    for g in 0..n {
        entries.push(checked_mul(q, companion.get(g))?);
    }
    entries.push(q);
    entries.push(S::zero());

    // Staircase closure: no entry may exceed its predecessor minus one.
    for g in 1..entries.len() {
        let cap = if entries[g - 1] > S::zero() {
            entries[g - 1] - S::one()
        } else {
            S::zero()
        };
        if entries[g] > cap {
            entries[g] = cap;
        }
    }
    BridgeSpectrum::new(entries)
}
