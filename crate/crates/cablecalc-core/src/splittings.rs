//! Genus accounting for generalized Heegaard splittings.
//!
//! A thin position of a knot exterior is recorded as a [`SplittingLedger`]:
//! the genera of its thick surfaces and of the thin surfaces separating them.
//! [`amalgamation_genus`] collapses the ledger to the genus of the amalgamated
//! splitting; [`segment_genus`] gives the genus produced by untelescoping a
//! tower of cable spaces between levels `l` and `m`; [`chi_assembly`] adds up
//! Euler characteristics of surface pieces and compares them against the
//! closed-surface bound `-2(m - l) - 2`; [`case_one_pieces`] builds the three
//! standard piece configurations that realize that bound with equality.
//!
//! The module also quantifies how many bridges a splitting *forces*:
//! [`bridge_lower_bound`] evaluates the trichotomy bound for a surface
//! positioned relative to the level-`l` companion torus, and
//! [`spectrum_lower_bound`] minimizes it over all untelescoping routes, which
//! meets the exact bridge spectrum at every genus.
//!
//! # Examples
//!
//! ```
//! use cablecalc_core::splittings::{amalgamation_genus, segment_genus, SplittingLedger};
//!
//! let ledger = SplittingLedger::new(vec![2i64, 2], vec![1]);
//! assert_eq!(amalgamation_genus(&ledger).unwrap(), 3);
//! assert_eq!(segment_genus(0i64, 1).unwrap(), 3);
//! ```

use serde::{Deserialize, Serialize};

use crate::cablespace::{min_euler_budget, EulerBudget};
use crate::error::{Error, Result};
use crate::scalar::{checked_add, checked_mul, checked_sub, Scalar};
use crate::spectrum::{bridge_spectrum, cabling_distance, torus_bridge_number, IteratedTorusKnot};

/// Genera of the thick and thin surfaces of a generalized splitting, in
/// order. A ledger with `k` thick surfaces has `k - 1` thin surfaces.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound = "")]
pub struct SplittingLedger<S: Scalar> {
    /// Genera of the thick surfaces.
    pub thick: Vec<S>,
    /// Genera of the thin surfaces (one fewer than thick).
    pub thin: Vec<S>,
}

impl<S: Scalar> SplittingLedger<S> {
    /// Package the genera; the shape rule is checked by
    /// [`amalgamation_genus`].
    pub fn new(thick: Vec<S>, thin: Vec<S>) -> Self {
        SplittingLedger { thick, thin }
    }
}

/// Genus of the splitting obtained by amalgamating the ledger: the thick
/// genera summed, minus the thin genera summed.
///
/// # Errors
///
/// - [`Error::LedgerShape`] unless there is exactly one more thick surface
///   than thin surfaces;
/// - [`Error::NegativeGenus`] if any recorded genus is negative;
/// - [`Error::NegativeAmalgamation`] if the thin genera outweigh the thick;
/// - [`Error::Overflow`] on scalar overflow.
///
/// # Examples
///
/// ```
/// use cablecalc_core::splittings::{amalgamation_genus, SplittingLedger};
///
/// assert_eq!(amalgamation_genus(&SplittingLedger::new(vec![2i64, 2], vec![1])).unwrap(), 3);
/// assert_eq!(amalgamation_genus(&SplittingLedger::new(vec![5i64], vec![])).unwrap(), 5);
/// assert_eq!(
///     amalgamation_genus(&SplittingLedger::new(vec![2i64, 2, 2], vec![1, 1])).unwrap(),
///     4
/// );
/// ```
pub fn amalgamation_genus<S: Scalar>(ledger: &SplittingLedger<S>) -> Result<S> {
    if ledger.thick.is_empty() || ledger.thin.len() != ledger.thick.len() - 1 {
        return Err(Error::LedgerShape {
            thick: ledger.thick.len(),
            thin: ledger.thin.len(),
        });
    }
    let mut thick_sum = S::zero();
    for &g in &ledger.thick {
        if g < S::zero() {
            return Err(Error::NegativeGenus {
                genus: g.to_string(),
            });
        }
        thick_sum = checked_add(thick_sum, g)?;
    }
    let mut thin_sum = S::zero();
    for &g in &ledger.thin {
        if g < S::zero() {
            return Err(Error::NegativeGenus {
                genus: g.to_string(),
            });
        }
        thin_sum = checked_add(thin_sum, g)?;
    }
    if thin_sum > thick_sum {
        return Err(Error::NegativeAmalgamation {
            thick_sum: thick_sum.to_string(),
            thin_sum: thin_sum.to_string(),
        });
    }
    checked_sub(thick_sum, thin_sum)
}

/// Genus produced by untelescoping the tower of levels `l..=m` of an
/// iterated torus knot exterior: `m - l + 2`.
///
/// # Errors
///
/// [`Error::SegmentOrder`] unless `0 <= l <= m`.
///
/// # Examples
///
/// ```
/// use cablecalc_core::splittings::segment_genus;
///
/// assert_eq!(segment_genus(0i64, 3).unwrap(), 5);
/// assert_eq!(segment_genus(2i64, 2).unwrap(), 2);
/// assert_eq!(segment_genus(1i64, 3).unwrap(), 4);
/// ```
pub fn segment_genus<S: Scalar>(l: S, m: S) -> Result<S> {
    if l < S::zero() || m < l {
        return Err(Error::SegmentOrder {
            l: l.to_string(),
            m: m.to_string(),
        });
    }
    checked_add(checked_sub(m, l)?, S::from(2i8))
}

/// One surface piece in an Euler-characteristic tally.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound = "")]
pub struct ChiPiece<S: Scalar> {
    /// Where the piece sits (free-form, deterministic).
    pub label: String,
    /// Euler characteristic of the piece.
    pub chi: S,
}

impl<S: Scalar> ChiPiece<S> {
    /// Convenience constructor.
    pub fn new(label: impl Into<String>, chi: S) -> Self {
        ChiPiece {
            label: label.into(),
            chi,
        }
    }
}

/// Result of tallying piece Euler characteristics against the segment bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChiAssembly<S: Scalar> {
    /// Total Euler characteristic of the pieces.
    pub sum: S,
    /// The closed-surface bound `-2(m - l) - 2`, when a segment was given.
    pub bound: Option<S>,
    /// Whether `sum <= bound` (vacuously true without a segment).
    pub meets_bound: bool,
    /// The pieces, echoed in input order.
    pub pieces: Vec<ChiPiece<S>>,
}

/// Sum the pieces' Euler characteristics and, when a segment `(l, m)` is
/// given, compare against the closed-surface bound `-2(m - l) - 2`.
///
/// # Errors
///
/// [`Error::SegmentOrder`] for a bad segment; [`Error::Overflow`] on scalar
/// overflow.
///
/// # Examples
///
/// ```
/// use cablecalc_core::splittings::{chi_assembly, ChiPiece};
///
/// let pieces = vec![
///     ChiPiece::new("bottom", -4i64),
///     ChiPiece::new("middle", -2),
///     ChiPiece::new("top", 0),
/// ];
/// let tally = chi_assembly(&pieces, Some((0, 2))).unwrap();
/// assert_eq!((tally.sum, tally.bound, tally.meets_bound), (-6, Some(-6), true));
///
/// let empty = chi_assembly(&[], None::<(i64, i64)>).unwrap();
/// assert_eq!((empty.sum, empty.bound, empty.meets_bound), (0, None, true));
/// ```
pub fn chi_assembly<S: Scalar>(
    pieces: &[ChiPiece<S>],
    segment: Option<(S, S)>,
) -> Result<ChiAssembly<S>> {
    let mut sum = S::zero();
    for piece in pieces {
        sum = checked_add(sum, piece.chi)?;
    }
    let bound = match segment {
        Some((l, m)) => {
            if l < S::zero() || m < l {
                return Err(Error::SegmentOrder {
                    l: l.to_string(),
                    m: m.to_string(),
                });
            }
            let minus_two = S::from(-2i8);
            Some(checked_add(
                checked_mul(minus_two, checked_sub(m, l)?)?,
                minus_two,
            )?)
        }
        None => None,
    };
    let meets_bound = bound.map_or(true, |b| sum <= b);
    Ok(ChiAssembly {
        sum,
        bound,
        meets_bound,
        pieces: pieces.to_vec(),
    })
}

/// Genus of the closed orientable surface with Euler characteristic `chi`:
/// `(2 - chi) / 2`.
///
/// # Errors
///
/// [`Error::NotClosedSurfaceChi`] when `chi > 2` or `chi` is odd.
///
/// # Examples
///
/// ```
/// use cablecalc_core::splittings::closed_surface_genus;
///
/// assert_eq!(closed_surface_genus(2i64).unwrap(), 0);
/// assert_eq!(closed_surface_genus(-6i64).unwrap(), 4);
/// assert!(closed_surface_genus(1i64).is_err());
/// ```
pub fn closed_surface_genus<S: Scalar>(chi: S) -> Result<S> {
    let two = S::from(2i8);
    let numerator = checked_sub(two, chi)?;
    if chi > two || !(numerator % two).is_zero() {
        return Err(Error::NotClosedSurfaceChi {
            chi: chi.to_string(),
        });
    }
    Ok(numerator / two)
}

/// Build the standard piece configuration for a surface spanning the tower
/// of levels `l..=m` with its distinguishing feature inserted at position
/// `i`. There are three shapes:
///
/// - `i = l`: a critical-fiber piece at the bottom level, saturated pieces
///   (Euler characteristic -2) in between, boundary annuli at the top;
/// - `i = l + 1`: a regular-fiber pair spanning the bottom two levels, then
///   saturated pieces and the top annuli (needs height `m - l >= 2`);
/// - `l + 2 <= i <= m - 1`: an adjacent pair plus a critical-fiber piece in
///   the interior (needs height `m - l >= 3`).
///
/// Every configuration sums to exactly the closed-surface bound
/// `-2(m - l) - 2`.
///
/// # Errors
///
/// [`Error::SegmentOrder`] for a bad segment; [`Error::InvalidInsertion`]
/// when `i` lies outside `l..=m - 1` or the height is too small for the
/// shape.
pub fn case_one_pieces<S: Scalar>(l: S, m: S, i: S) -> Result<Vec<ChiPiece<S>>> {
    if l < S::zero() || m < l {
        return Err(Error::SegmentOrder {
            l: l.to_string(),
            m: m.to_string(),
        });
    }
    let one = S::one();
    let invalid = |reason: &'static str| Error::InvalidInsertion {
        i: i.to_string(),
        l: l.to_string(),
        m: m.to_string(),
        reason,
    };
    if i < l || i >= m {
        return Err(invalid("need l <= i <= m - 1"));
    }

    let mut pieces = Vec::new();
    let saturated_from = if i == l {
        let label = if l.is_zero() {
            format!("{}(level {l})", EulerBudget::TorusExteriorCriticalFiber)
        } else {
            format!("{}(level {l})", EulerBudget::CableCriticalFiber)
        };
        let budget = if l.is_zero() {
            min_euler_budget::<S>(EulerBudget::TorusExteriorCriticalFiber)
        } else {
            min_euler_budget::<S>(EulerBudget::CableCriticalFiber)
        };
        pieces.push(ChiPiece::new(label, budget));
        checked_add(l, one)?
    } else if i == checked_add(l, one)? {
        if m < checked_add(l, S::from(2i8))? {
            return Err(invalid("the regular-fiber pair needs height at least 2"));
        }
        pieces.push(ChiPiece::new(
            format!("{}(levels {l},{i})", EulerBudget::CableRegularFiber),
            min_euler_budget::<S>(EulerBudget::CableRegularFiber),
        ));
        checked_add(l, S::from(2i8))?
    } else {
        if m < checked_add(l, S::from(3i8))? {
            return Err(invalid("an interior pair needs height at least 3"));
        }
        pieces.push(ChiPiece::new(
            format!("{}(insertion {i})", EulerBudget::AdjacentPair),
            min_euler_budget::<S>(EulerBudget::AdjacentPair),
        ));
        pieces.push(ChiPiece::new(
            format!("{}(insertion {i})", EulerBudget::CableCriticalFiber),
            min_euler_budget::<S>(EulerBudget::CableCriticalFiber),
        ));
        checked_add(l, S::from(3i8))?
    };

    // Saturated middle pieces fill the remaining levels below the top.
    let mut level = saturated_from;
    while level < m {
        pieces.push(ChiPiece::new(
            format!("saturated-piece({level})"),
            S::from(-2i8),
        ));
        level = checked_add(level, one)?;
    }
    pieces.push(ChiPiece::new(
        format!("boundary-annuli(level {m})"),
        S::zero(),
    ));
    Ok(pieces)
}

/// How many bridges a genus-`g` surface positioned relative to the level-`l`
/// companion torus forces on the knot, by the trichotomy:
///
/// - no constraint (0) when the genus budget exceeds the remaining tower
///   (`g > depth - l`) or at the core position;
/// - at the base, the torus-knot bridge number `min(|p0|, q0)` when `g = 0`;
/// - otherwise each cabling level multiplies the forced count (at least 1)
///   by `q`, except that at the last step before the companion
///   (`l = depth - 1` with `g = 1`) the surface may instead follow the
///   cabling annulus, capping the contribution at the cabling distance.
///
/// # Errors
///
/// - [`Error::CompanionLevel`] unless `0 <= l <= depth - 1`;
/// - [`Error::InvalidKnot`] / [`Error::NotAdmissible`] for bad knots;
/// - [`Error::Overflow`] on scalar overflow.
///
/// # Examples
///
/// ```
/// use cablecalc_core::spectrum::{CablingParams, IteratedTorusKnot};
/// use cablecalc_core::splittings::bridge_lower_bound;
///
/// let knot = IteratedTorusKnot::new(
///     CablingParams::new(3i64, 2),
///     vec![CablingParams::new(21, 4)],
/// );
/// assert_eq!(bridge_lower_bound(&knot, 0, 1).unwrap(), 3);
/// assert_eq!(bridge_lower_bound(&knot, 0, 2).unwrap(), 0); // g = depth - l + 1
/// ```
pub fn bridge_lower_bound<S: Scalar>(knot: &IteratedTorusKnot<S>, l: usize, g: usize) -> Result<S> {
    // Validity and admissibility checked once up front.
    bridge_spectrum(knot)?;
    if knot.depth() == 0 || l > knot.depth() - 1 {
        return Err(Error::CompanionLevel {
            l,
            levels: knot.depth(),
        });
    }
    forced(knot, knot.depth(), l, g)
}

/// The trichotomy recursion behind [`bridge_lower_bound`], on the depth-`m`
/// companion. Precondition: the knot is valid and admissible, `l <= m`.
fn forced<S: Scalar>(knot: &IteratedTorusKnot<S>, m: usize, l: usize, g: usize) -> Result<S> {
    if m == 0 {
        let base = knot.base();
        return if g == 0 {
            torus_bridge_number(base.p, base.q)
        } else {
            Ok(S::zero())
        };
    }
    if m == l || g > m - l {
        return Ok(S::zero());
    }
    let inner = forced(knot, m - 1, l, g)?;
    let inner = if inner > S::one() { inner } else { S::one() };
    let scaled = checked_mul(knot.level(m).q, inner)?;
    if l == m - 1 && g == 1 {
        let pstar = cabling_distance(knot, m)?;
        Ok(if pstar < scaled { pstar } else { scaled })
    } else {
        Ok(scaled)
    }
}

/// The sharpest lower bound on the genus-`g` bridge number obtainable by
/// untelescoping: the *minimum* of [`bridge_lower_bound`] over all feasible
/// routes. Route `l = 0` keeps the full genus budget `g`; route `l >= 1`
/// spends `l` of it on the companion tower, leaving `g - l >= 1`.
///
/// For admissible knots this bound meets [`bridge_spectrum`] at every genus.
///
/// # Errors
///
/// [`Error::InvalidKnot`], [`Error::NotAdmissible`], or [`Error::Overflow`].
///
/// # Examples
///
/// ```
/// use cablecalc_core::spectrum::{CablingParams, IteratedTorusKnot};
/// use cablecalc_core::splittings::spectrum_lower_bound;
///
/// let knot = IteratedTorusKnot::new(
///     CablingParams::new(3i64, 2),
///     vec![CablingParams::new(21, 4)],
/// );
/// assert_eq!(spectrum_lower_bound(&knot, 0).unwrap(), 8);
/// assert_eq!(spectrum_lower_bound(&knot, 1).unwrap(), 3);
/// assert_eq!(spectrum_lower_bound(&knot, 2).unwrap(), 0);
/// ```
pub fn spectrum_lower_bound<S: Scalar>(knot: &IteratedTorusKnot<S>, g: usize) -> Result<S> {
    bridge_spectrum(knot)?;
    let n = knot.depth();
    let mut best = forced(knot, n, 0, g)?;
    let l_max = n.saturating_sub(1).min(g.saturating_sub(1));
    for l in 1..=l_max {
        let candidate = forced(knot, n, l, g - l)?;
        if candidate < best {
            best = candidate;
        }
    }
    Ok(best)
}
