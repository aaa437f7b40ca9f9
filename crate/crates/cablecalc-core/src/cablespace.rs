//! Cable spaces and the essential surfaces they carry.
//!
//! The cable space `C_{p,q}` is the Seifert-fibered complement of a `(p, q)`
//! torus knot inside its solid-torus neighborhood's boundary collar: a compact
//! manifold with two torus boundary components. We call the boundary where the
//! cabled knot lives the *outer* boundary and the one facing the companion
//! solid torus the *inner* boundary. The regular fiber meets the outer
//! boundary in slope `p/q` and the inner boundary in the integral slope
//! `pq/1`.
//!
//! Essential surfaces in `C_{p,q}` fall into the families implemented here:
//!
//! - [`vertical_class`]: the saturated essential annulus;
//! - [`horizontal_class`]: branched multi-sections indexed by a coprime pair
//!   `(m, n)` with `n >= 0`;
//! - [`planar_a_class`]: planar one-bridge surfaces indexed by an outer slope
//!   at distance 1 from the fiber slope;
//! - [`planar_b_class`]: planar surfaces indexed by an integer twisting
//!   parameter `k` (the `k = 0` member is the meridional one).
//!
//! Each class records, exactly, how many boundary components it has on each
//! side, their common slope, and the surface's Euler characteristic. The
//! module also provides the Euler characteristics of horizontal covers
//! ([`cover_euler_torus_exterior`], [`cover_euler_cable`]) and the sharp
//! minimum-Euler-characteristic budgets ([`min_euler_budget`]) used when
//! assembling closed surfaces from pieces.
//!
//! # Examples
//!
//! ```
//! use cablecalc_core::cablespace::{vertical_class, CableSpace};
//!
//! let cs = CableSpace::new(3i64, 2).unwrap();
//! let v = vertical_class(&cs);
//! assert_eq!(v.outer.slope.to_string(), "3/2");
//! assert_eq!(v.inner.slope.to_string(), "6/1");
//! assert_eq!(v.euler, 0);
//! ```

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{checked_abs, checked_add, checked_gcd, checked_mul, checked_sub, Scalar};
use crate::slopes::{delta, normalize, Slope};

/// The cable space `C_{p,q}`: parameters of the cabling pattern.
///
/// # Invariants
///
/// - `gcd(p, q) = 1`;
/// - `q >= 2` (`p = +-1` is allowed; `p = 0` is impossible given coprimality).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct CableSpace<S: Scalar> {
    p: S,
    q: S,
}

impl<S: Scalar> CableSpace<S> {
    /// Validate and build a cable space.
    ///
    /// # Errors
    ///
    /// [`Error::InvalidCableSpace`] when `q < 2` or `gcd(p, q) != 1`.
    pub fn new(p: S, q: S) -> Result<Self> {
        let two = S::from(2i8);
        if q < two {
            return Err(Error::InvalidCableSpace {
                p: p.to_string(),
                q: q.to_string(),
                reason: "q must be at least 2",
            });
        }
        if checked_gcd(p, q)? != S::one() {
            return Err(Error::InvalidCableSpace {
                p: p.to_string(),
                q: q.to_string(),
                reason: "p and q must be coprime",
            });
        }
        Ok(CableSpace { p, q })
    }

    /// Winding of the pattern in the fiber direction.
    pub fn p(&self) -> S {
        self.p
    }

    /// Winding of the pattern around the companion (the fiber multiplicity).
    pub fn q(&self) -> S {
        self.q
    }

    /// Slope of the regular fiber on the outer boundary: `p/q`.
    pub fn outer_fiber_slope(&self) -> Slope<S> {
        normalize(self.p, self.q).expect("p/q with q >= 2 is a valid slope")
    }

    /// Slope of the regular fiber on the inner boundary: the integral slope
    /// `pq/1`.
    ///
    /// # Errors
    ///
    /// [`Error::Overflow`] when `p * q` exceeds the scalar's range.
    pub fn inner_fiber_slope(&self) -> Result<Slope<S>> {
        normalize(checked_mul(self.p, self.q)?, S::one())
    }
}

/// A family of parallel boundary circles on one side of a surface: how many,
/// and at which slope.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct BoundaryFamily<S: Scalar> {
    /// Number of boundary components in the family (positive).
    pub count: S,
    /// Common slope of every component in the family.
    pub slope: Slope<S>,
}

/// Which surface family a class belongs to, with its defining parameters.
///
/// Serialized adjacently as `{"kind": ..., "params": {...}}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(
    tag = "kind",
    content = "params",
    rename_all = "snake_case",
    bound = ""
)]
pub enum SurfaceKind<S: Scalar> {
    /// The saturated essential annulus.
    Vertical {},
    /// Branched multi-section with parameters `(m, n)`.
    Horizontal { m: S, n: S },
    /// Planar one-bridge surface along an outer slope `l/m` at distance 1
    /// from the fiber slope (stored in normalized form).
    PlanarA { l: S, m: S },
    /// Planar twisted surface with twisting parameter `k`.
    PlanarB { k: S },
}

/// Exact boundary and Euler data of one essential-surface class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct SurfaceClass<S: Scalar> {
    /// The family and its parameters.
    #[serde(flatten)]
    pub kind: SurfaceKind<S>,
    /// Boundary components on the outer torus.
    pub outer: BoundaryFamily<S>,
    /// Boundary components on the inner torus.
    pub inner: BoundaryFamily<S>,
    /// Euler characteristic of the surface.
    pub euler: S,
}

/// Split a total boundary class `(num, den)` into parallel components: the
/// number of components is `gcd(|num|, |den|)` (with `gcd(x, 0) = |x|`) and
/// each has the primitive slope `normalize(num, den)`.
fn decompose_total<S: Scalar>(num: S, den: S) -> Result<BoundaryFamily<S>> {
    let count = checked_gcd(num, den)?;
    if count.is_zero() {
        return Err(Error::ZeroZeroSlope);
    }
    Ok(BoundaryFamily {
        count,
        slope: normalize(num, den)?,
    })
}

/// The vertical essential annulus: one boundary circle of slope `p/q` on the
/// outer torus, one of slope `pq/1` on the inner torus, Euler characteristic 0.
///
/// # Examples
///
/// ```
/// use cablecalc_core::cablespace::{vertical_class, CableSpace};
///
/// let v = vertical_class(&CableSpace::new(-5i64, 2).unwrap());
/// assert_eq!(v.outer.slope.to_string(), "-5/2");
/// assert_eq!(v.inner.slope.to_string(), "-10/1");
/// ```
pub fn vertical_class<S: Scalar>(cs: &CableSpace<S>) -> SurfaceClass<S> {
    SurfaceClass {
        kind: SurfaceKind::Vertical {},
        outer: BoundaryFamily {
            count: S::one(),
            slope: cs.outer_fiber_slope(),
        },
        inner: BoundaryFamily {
            count: S::one(),
            slope: cs
                .inner_fiber_slope()
                .expect("callers construct cable spaces within scalar range"),
        },
        euler: S::zero(),
    }
}

/// The horizontal surface with parameters `(m, n)`: total outer boundary
/// class `(n + m*p, q*m)`, total inner boundary class `(q*(n + m*p), m)`,
/// Euler characteristic `n * (1 - q)`.
///
/// The degenerate member `m = 0` (which forces `n = 1`) is meridional on both
/// boundaries.
///
/// # Errors
///
/// - [`Error::InvalidHorizontalParams`] when `gcd(m, n) != 1` or `n < 0`;
/// - [`Error::Overflow`] on scalar overflow.
///
/// # Examples
///
/// ```
/// use cablecalc_core::cablespace::{horizontal_class, CableSpace};
///
/// let cs = CableSpace::new(3i64, 2).unwrap();
/// let h = horizontal_class(&cs, 1, 1).unwrap();
/// assert_eq!((h.outer.count, h.outer.slope.to_string()), (2, "2/1".into()));
/// assert_eq!((h.inner.count, h.inner.slope.to_string()), (1, "8/1".into()));
/// assert_eq!(h.euler, -1);
/// ```
pub fn horizontal_class<S: Scalar>(cs: &CableSpace<S>, m: S, n: S) -> Result<SurfaceClass<S>> {
    if n < S::zero() {
        return Err(Error::InvalidHorizontalParams {
            m: m.to_string(),
            n: n.to_string(),
            reason: "n must be nonnegative",
        });
    }
    if checked_gcd(m, n)? != S::one() {
        return Err(Error::InvalidHorizontalParams {
            m: m.to_string(),
            n: n.to_string(),
            reason: "m and n must be coprime",
        });
    }
    let a = checked_add(n, checked_mul(m, cs.p)?)?;
    let outer = decompose_total(a, checked_mul(cs.q, m)?)?;
    let inner = decompose_total(checked_mul(cs.q, a)?, m)?;
    let euler = checked_mul(n, checked_sub(S::one(), cs.q)?)?;
    Ok(SurfaceClass {
        kind: SurfaceKind::Horizontal { m, n },
        outer,
        inner,
        euler,
    })
}

/// The planar one-bridge surface along an outer slope `l/m` at distance
/// exactly 1 from the fiber slope `p/q`: `q` outer boundary components of
/// slope `l/m`, one inner component of slope `l*q^2 / m`, Euler
/// characteristic `2 - (q + 1) = 1 - q`.
///
/// The input pair is normalized before use, so non-primitive representatives
/// of a valid slope are accepted.
///
/// # Errors
///
/// - [`Error::ZeroZeroSlope`] for the input `0/0`;
/// - [`Error::PlanarDistance`] when the slope is not at distance 1 from the
///   fiber slope;
/// - [`Error::Overflow`] on scalar overflow.
///
/// # Examples
///
/// ```
/// use cablecalc_core::cablespace::{planar_a_class, CableSpace};
///
/// let cs = CableSpace::new(3i64, 2).unwrap();
/// let s = planar_a_class(&cs, 1, 1).unwrap();
/// assert_eq!((s.outer.count, s.outer.slope.to_string()), (2, "1/1".into()));
/// assert_eq!((s.inner.count, s.inner.slope.to_string()), (1, "4/1".into()));
/// assert!(planar_a_class(&cs, 1, 0).is_err()); // meridian is at distance 2
/// ```
pub fn planar_a_class<S: Scalar>(cs: &CableSpace<S>, l: S, m: S) -> Result<SurfaceClass<S>> {
    let s = normalize(l, m)?;
    let d = delta(&s, &cs.outer_fiber_slope())?;
    if d != S::one() {
        return Err(Error::PlanarDistance {
            l: s.num().to_string(),
            m: s.den().to_string(),
            p: cs.p.to_string(),
            q: cs.q.to_string(),
            delta: d.to_string(),
        });
    }
    let q_squared = checked_mul(cs.q, cs.q)?;
    let inner_slope = normalize(checked_mul(s.num(), q_squared)?, s.den())?;
    let euler = checked_sub(S::one(), cs.q)?;
    Ok(SurfaceClass {
        kind: SurfaceKind::PlanarA {
            l: s.num(),
            m: s.den(),
        },
        outer: BoundaryFamily {
            count: cs.q,
            slope: s,
        },
        inner: BoundaryFamily {
            count: S::one(),
            slope: inner_slope,
        },
        euler,
    })
}

/// The planar twisted surface with parameter `k`: one outer boundary
/// component of slope `(1 + k*p*q) / (k*q^2)`, `q` inner components of slope
/// `(1 + k*p*q) / k`, Euler characteristic `1 - q`. At `k = 0` both sides are
/// meridional.
///
/// # Errors
///
/// [`Error::Overflow`] on scalar overflow.
///
/// # Examples
///
/// ```
/// use cablecalc_core::cablespace::{planar_b_class, CableSpace};
///
/// let cs = CableSpace::new(3i64, 2).unwrap();
/// let s = planar_b_class(&cs, 1).unwrap();
/// assert_eq!(s.outer.slope.to_string(), "7/4");
/// assert_eq!((s.inner.count, s.inner.slope.to_string()), (2, "7/1".into()));
///
/// let meridional = planar_b_class(&cs, 0).unwrap();
/// assert!(meridional.outer.slope.is_meridional());
/// assert!(meridional.inner.slope.is_meridional());
/// ```
pub fn planar_b_class<S: Scalar>(cs: &CableSpace<S>, k: S) -> Result<SurfaceClass<S>> {
    let a = checked_add(S::one(), checked_mul(k, checked_mul(cs.p, cs.q)?)?)?;
    let q_squared = checked_mul(cs.q, cs.q)?;
    let outer_slope = normalize(a, checked_mul(k, q_squared)?)?;
    let inner_slope = normalize(a, k)?;
    let euler = checked_sub(S::one(), cs.q)?;
    Ok(SurfaceClass {
        kind: SurfaceKind::PlanarB { k },
        outer: BoundaryFamily {
            count: S::one(),
            slope: outer_slope,
        },
        inner: BoundaryFamily {
            count: cs.q,
            slope: inner_slope,
        },
        euler,
    })
}

/// Does integrality propagate inward for this class? True unless some outer
/// component is integral while an inner component is not.
///
/// For every class constructed by this module the answer is `true`; the
/// predicate exists so that sweeps can *check* that fact rather than assume
/// it.
pub fn integral_propagates<S: Scalar>(class: &SurfaceClass<S>) -> bool {
    !class.outer.slope.is_integral() || class.inner.slope.is_integral()
}

/// Is the class meridional on the outer boundary exactly when it is
/// meridional on the inner boundary? Again `true` for every constructed
/// class; exposed as a checkable predicate.
pub fn meridional_iff<S: Scalar>(class: &SurfaceClass<S>) -> bool {
    class.outer.slope.is_meridional() == class.inner.slope.is_meridional()
}

/// Euler characteristic of the degree-`d` horizontal cover of a torus-knot
/// exterior with parameters `(p0, q0)`: `-2d + d/|p0| + d/q0`.
///
/// # Errors
///
/// - [`Error::InvalidKnot`] when `|p0| < 2`, `q0 < 2`, or `gcd(p0, q0) != 1`;
/// - [`Error::InvalidCoverDegree`] when `d` is not a positive common multiple
///   of `|p0|` and `q0`;
/// - [`Error::Overflow`] on scalar overflow.
///
/// # Examples
///
/// ```
/// use cablecalc_core::cablespace::cover_euler_torus_exterior;
///
/// assert_eq!(cover_euler_torus_exterior(3i64, 2, 6).unwrap(), -7);
/// assert_eq!(cover_euler_torus_exterior(3i64, 2, 12).unwrap(), -14);
/// assert_eq!(cover_euler_torus_exterior(5i64, 2, 10).unwrap(), -13);
/// ```
pub fn cover_euler_torus_exterior<S: Scalar>(p0: S, q0: S, d: S) -> Result<S> {
    let two = S::from(2i8);
    let p_abs = checked_abs(p0)?;
    if p_abs < two || q0 < two {
        return Err(Error::InvalidKnot(format!(
            "torus-knot parameters ({p0}, {q0}): |p| and q must both be at least 2"
        )));
    }
    if checked_gcd(p0, q0)? != S::one() {
        return Err(Error::InvalidKnot(format!(
            "torus-knot parameters ({p0}, {q0}): p and q must be coprime"
        )));
    }
    if d <= S::zero() {
        return Err(Error::InvalidCoverDegree {
            d: d.to_string(),
            reason: "degree must be positive",
        });
    }
    if !(d % p_abs).is_zero() || !(d % q0).is_zero() {
        return Err(Error::InvalidCoverDegree {
            d: d.to_string(),
            reason: "degree must be a common multiple of |p| and q",
        });
    }
    // -2d + d/|p| + d/q, each division exact by the checks above.
    let minus_2d = checked_mul(S::zero() - two, d)?;
    checked_add(checked_add(minus_2d, d / p_abs)?, d / q0)
}

/// Euler characteristic of the degree-`d` horizontal surface in a cable
/// space with fiber multiplicity `q`: `-2d + d/q`.
///
/// # Errors
///
/// - [`Error::InvalidFiberOrder`] when `q < 2`;
/// - [`Error::InvalidCoverDegree`] when `d` is not a positive multiple of `q`;
/// - [`Error::Overflow`] on scalar overflow.
///
/// # Examples
///
/// ```
/// use cablecalc_core::cablespace::cover_euler_cable;
///
/// assert_eq!(cover_euler_cable(2i64, 2).unwrap(), -3);
/// assert_eq!(cover_euler_cable(4i64, 4).unwrap(), -7);
/// assert_eq!(cover_euler_cable(3i64, 6).unwrap(), -10);
/// ```
pub fn cover_euler_cable<S: Scalar>(q: S, d: S) -> Result<S> {
    let two = S::from(2i8);
    if q < two {
        return Err(Error::InvalidFiberOrder { q: q.to_string() });
    }
    if d <= S::zero() {
        return Err(Error::InvalidCoverDegree {
            d: d.to_string(),
            reason: "degree must be positive",
        });
    }
    if !(d % q).is_zero() {
        return Err(Error::InvalidCoverDegree {
            d: d.to_string(),
            reason: "degree must be a multiple of q",
        });
    }
    let minus_2d = checked_mul(S::zero() - two, d)?;
    checked_add(minus_2d, d / q)
}

/// Positions a compact piece can occupy when a closed surface is assembled
/// from pieces meeting the fibered structure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EulerBudget {
    /// Piece in a torus-knot exterior transverse to the regular fibers.
    TorusExteriorRegularFiber,
    /// Piece in a torus-knot exterior through the critical fiber.
    TorusExteriorCriticalFiber,
    /// Piece in a cable space transverse to the regular fibers.
    CableRegularFiber,
    /// Piece in a cable space through the critical fiber.
    CableCriticalFiber,
    /// Piece spanning two adjacent cable spaces at once.
    AdjacentPair,
}

impl std::fmt::Display for EulerBudget {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            EulerBudget::TorusExteriorRegularFiber => "torus-exterior-regular-fiber",
            EulerBudget::TorusExteriorCriticalFiber => "torus-exterior-critical-fiber",
            EulerBudget::CableRegularFiber => "cable-regular-fiber",
            EulerBudget::CableCriticalFiber => "cable-critical-fiber",
            EulerBudget::AdjacentPair => "adjacent-pair",
        };
        f.write_str(name)
    }
}

/// Sharp minimum Euler characteristic available to an essential piece in the
/// given position. These are the constants the closed-surface assembly
/// arguments charge against.
///
/// # Examples
///
/// ```
/// use cablecalc_core::cablespace::{min_euler_budget, EulerBudget};
///
/// assert_eq!(min_euler_budget::<i64>(EulerBudget::TorusExteriorRegularFiber), -14);
/// assert_eq!(min_euler_budget::<i64>(EulerBudget::CableCriticalFiber), -4);
/// ```
pub fn min_euler_budget<S: Scalar>(case: EulerBudget) -> S {
    let value: i8 = match case {
        EulerBudget::TorusExteriorRegularFiber => -14,
        EulerBudget::TorusExteriorCriticalFiber => -4,
        EulerBudget::CableRegularFiber => -6,
        EulerBudget::CableCriticalFiber => -4,
        EulerBudget::AdjacentPair => -4,
    };
    S::from(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn cs(p: i64, q: i64) -> CableSpace<i64> {
        CableSpace::new(p, q).unwrap()
    }

    fn slope(num: i64, den: i64) -> Slope<i64> {
        normalize(num, den).unwrap()
    }

    #[test]
    fn cable_space_validation() {
        assert!(CableSpace::new(3i64, 2).is_ok());
        assert!(CableSpace::new(1i64, 2).is_ok());
        assert!(CableSpace::new(-1i64, 5).is_ok());
        assert!(matches!(
            CableSpace::new(4i64, 2),
            Err(Error::InvalidCableSpace { .. })
        ));
        assert!(matches!(
            CableSpace::new(3i64, 1),
            Err(Error::InvalidCableSpace { .. })
        ));
        assert!(matches!(
            CableSpace::new(3i64, 0),
            Err(Error::InvalidCableSpace { .. })
        ));
    }

    #[test]
    fn fiber_slopes() {
        assert_eq!(cs(3, 2).outer_fiber_slope(), slope(3, 2));
        assert_eq!(cs(3, 2).inner_fiber_slope().unwrap(), slope(6, 1));
        assert_eq!(cs(21, 4).outer_fiber_slope(), slope(21, 4));
        assert_eq!(cs(21, 4).inner_fiber_slope().unwrap(), slope(84, 1));
        assert_eq!(cs(-5, 2).inner_fiber_slope().unwrap(), slope(-10, 1));
    }

    #[test]
    fn vertical_annulus_boundary_data() {
        for (p, q, outer, inner) in [
            (3, 2, (3, 2), (6, 1)),
            (21, 4, (21, 4), (84, 1)),
            (-5, 2, (-5, 2), (-10, 1)),
        ] {
            let v = vertical_class(&cs(p, q));
            assert_eq!(
                v.outer,
                BoundaryFamily {
                    count: 1,
                    slope: slope(outer.0, outer.1)
                }
            );
            assert_eq!(
                v.inner,
                BoundaryFamily {
                    count: 1,
                    slope: slope(inner.0, inner.1)
                }
            );
            assert_eq!(v.euler, 0);
        }
    }

    #[test]
    fn horizontal_worked_examples() {
        let h = horizontal_class(&cs(3, 2), 1, 1).unwrap();
        assert_eq!(
            h.outer,
            BoundaryFamily {
                count: 2,
                slope: slope(2, 1)
            }
        );
        assert_eq!(
            h.inner,
            BoundaryFamily {
                count: 1,
                slope: slope(8, 1)
            }
        );
        assert_eq!(h.euler, -1);

        let h = horizontal_class(&cs(21, 4), 1, 3).unwrap();
        assert_eq!(
            h.outer,
            BoundaryFamily {
                count: 4,
                slope: slope(6, 1)
            }
        );
        assert_eq!(
            h.inner,
            BoundaryFamily {
                count: 1,
                slope: slope(96, 1)
            }
        );
        assert_eq!(h.euler, -9);
    }

    #[test]
    fn horizontal_meridional_member() {
        // m = 0 forces n = 1 by coprimality and is meridional on both sides.
        let h = horizontal_class(&cs(3, 2), 0, 1).unwrap();
        assert_eq!(
            h.outer,
            BoundaryFamily {
                count: 1,
                slope: Slope::meridian()
            }
        );
        assert_eq!(
            h.inner,
            BoundaryFamily {
                count: 2,
                slope: Slope::meridian()
            }
        );
        assert_eq!(h.euler, -1); // 1 - q
    }

    #[test]
    fn horizontal_rejects_bad_parameters() {
        assert!(matches!(
            horizontal_class(&cs(3, 2), 2, 2),
            Err(Error::InvalidHorizontalParams { .. })
        ));
        assert!(matches!(
            horizontal_class(&cs(3, 2), 1, -1),
            Err(Error::InvalidHorizontalParams { .. })
        ));
        assert!(matches!(
            horizontal_class(&cs(3, 2), 0, 2),
            Err(Error::InvalidHorizontalParams { .. })
        ));
    }

    #[test]
    fn planar_one_bridge_worked_examples() {
        let s = planar_a_class(&cs(3, 2), 1, 1).unwrap();
        assert_eq!(
            s.outer,
            BoundaryFamily {
                count: 2,
                slope: slope(1, 1)
            }
        );
        assert_eq!(
            s.inner,
            BoundaryFamily {
                count: 1,
                slope: slope(4, 1)
            }
        );
        assert_eq!(s.euler, -1);

        let s = planar_a_class(&cs(3, 2), 2, 1).unwrap();
        assert_eq!(
            s.outer,
            BoundaryFamily {
                count: 2,
                slope: slope(2, 1)
            }
        );
        assert_eq!(
            s.inner,
            BoundaryFamily {
                count: 1,
                slope: slope(8, 1)
            }
        );

        match planar_a_class(&cs(3, 2), 1, 0) {
            Err(Error::PlanarDistance { delta, .. }) => assert_eq!(delta, "2"),
            other => panic!("expected distance error, got {other:?}"),
        }
    }

    #[test]
    fn planar_twisted_worked_examples() {
        let meridional = planar_b_class(&cs(3, 2), 0).unwrap();
        assert_eq!(
            meridional.outer,
            BoundaryFamily {
                count: 1,
                slope: Slope::meridian()
            }
        );
        assert_eq!(
            meridional.inner,
            BoundaryFamily {
                count: 2,
                slope: Slope::meridian()
            }
        );
        assert_eq!(meridional.euler, -1);

        let s = planar_b_class(&cs(3, 2), 1).unwrap();
        assert_eq!(
            s.outer,
            BoundaryFamily {
                count: 1,
                slope: slope(7, 4)
            }
        );
        assert_eq!(
            s.inner,
            BoundaryFamily {
                count: 2,
                slope: slope(7, 1)
            }
        );
        assert_eq!(s.euler, -1);

        // k = -1: numerator 1 + k*p*q = -5, so the normalized boundary
        // slopes are (-5)/(-4) = 5/4 outside and (-5)/(-1) = 5/1 inside.
        let s = planar_b_class(&cs(3, 2), -1).unwrap();
        assert_eq!(
            s.outer,
            BoundaryFamily {
                count: 1,
                slope: slope(5, 4)
            }
        );
        assert_eq!(
            s.inner,
            BoundaryFamily {
                count: 2,
                slope: slope(5, 1)
            }
        );
        assert_eq!(s.euler, -1);
    }

    /// Every planar one-bridge class carries the same boundary and Euler data
    /// as the horizontal class with parameters (sign(l*q - m*p) * m, 1).
    #[test]
    fn planar_one_bridge_is_a_horizontal_class_in_disguise() {
        for p in [-7i64, -3, 2, 3, 5, 21] {
            for q in 2i64..=6 {
                let Ok(space) = CableSpace::new(p, q) else {
                    continue;
                };
                for l in -25i64..=25 {
                    for m in -10i64..=10 {
                        let Ok(a) = planar_a_class(&space, l, m) else {
                            continue;
                        };
                        let (l, m) = match a.kind {
                            SurfaceKind::PlanarA { l, m } => (l, m),
                            _ => unreachable!(),
                        };
                        let sigma = (l * q - m * p).signum();
                        let h = horizontal_class(&space, sigma * m, 1).unwrap();
                        assert_eq!(
                            a.outer, h.outer,
                            "outer mismatch at ({p},{q}) slope {l}/{m}"
                        );
                        assert_eq!(
                            a.inner, h.inner,
                            "inner mismatch at ({p},{q}) slope {l}/{m}"
                        );
                        assert_eq!(a.euler, h.euler);
                    }
                }
            }
        }
    }

    /// Every planar twisted class is the horizontal class (k*q, 1).
    #[test]
    fn planar_twisted_is_a_horizontal_class_in_disguise() {
        for p in [-7i64, -3, -1, 1, 2, 3, 5, 21] {
            for q in 2i64..=6 {
                let Ok(space) = CableSpace::new(p, q) else {
                    continue;
                };
                for k in -20i64..=20 {
                    let b = planar_b_class(&space, k).unwrap();
                    let h = horizontal_class(&space, k * q, 1).unwrap();
                    assert_eq!(b.outer, h.outer, "outer mismatch at ({p},{q}) k={k}");
                    assert_eq!(b.inner, h.inner, "inner mismatch at ({p},{q}) k={k}");
                    assert_eq!(b.euler, h.euler);
                }
            }
        }
    }

    /// With |p*q| > 2, a twisted class has outer slope of the form 1/n only
    /// at k = 0; the exceptional solutions all live at |p| = 1, q = 2.
    #[test]
    fn unit_numerator_twisted_classes_are_exactly_the_known_family() {
        let mut witnesses = Vec::new();
        for p in -30i64..=30 {
            for q in 2i64..=6 {
                let Ok(space) = CableSpace::new(p, q) else {
                    continue;
                };
                for k in -20i64..=20 {
                    if k == 0 {
                        continue;
                    }
                    let class = planar_b_class(&space, k).unwrap();
                    if class.outer.slope.has_unit_numerator() {
                        witnesses.push((p, q, k));
                    }
                }
            }
        }
        // 1 + k*p*q = +-1 with k != 0 forces k*p*q = -2, i.e. q = 2, p = +-1.
        assert_eq!(witnesses, vec![(-1, 2, 1), (1, 2, -1)]);
        for (p, q, k) in witnesses {
            assert!(p.abs() * q <= 2, "witness ({p},{q},{k}) escapes |pq| <= 2");
        }
    }

    #[test]
    fn propagation_predicates_hold_on_a_grid() {
        for p in -15i64..=15 {
            for q in 2i64..=6 {
                let Ok(space) = CableSpace::new(p, q) else {
                    continue;
                };
                let mut classes = vec![vertical_class(&space)];
                for m in -12i64..=12 {
                    for n in 0i64..=12 {
                        if let Ok(h) = horizontal_class(&space, m, n) {
                            classes.push(h);
                        }
                    }
                }
                for l in -20i64..=20 {
                    for m in -8i64..=8 {
                        if let Ok(a) = planar_a_class(&space, l, m) {
                            classes.push(a);
                        }
                    }
                }
                for k in -12i64..=12 {
                    classes.push(planar_b_class(&space, k).unwrap());
                }
                for class in &classes {
                    assert!(
                        integral_propagates(class),
                        "failed for {class:?} in ({p},{q})"
                    );
                    assert!(meridional_iff(class), "failed for {class:?} in ({p},{q})");
                }
            }
        }
    }

    #[test]
    fn integral_propagation_worked_examples() {
        // Outer slope 7/3 is not integral, so the implication is vacuous.
        let h = horizontal_class(&cs(5, 3), 1, 2).unwrap();
        assert_eq!(h.outer.slope, slope(7, 3));
        assert!(integral_propagates(&h));
        // Outer slope 2/1 is integral and the inner slope 8/1 follows suit.
        let h = horizontal_class(&cs(3, 2), 1, 1).unwrap();
        assert!(h.outer.slope.is_integral());
        assert!(h.inner.slope.is_integral());
        assert!(integral_propagates(&h));
    }

    #[test]
    fn cover_euler_torus_exterior_worked_examples() {
        assert_eq!(cover_euler_torus_exterior(3i64, 2, 6).unwrap(), -7);
        assert_eq!(cover_euler_torus_exterior(3i64, 2, 12).unwrap(), -14);
        assert_eq!(cover_euler_torus_exterior(5i64, 2, 10).unwrap(), -13);
        assert_eq!(cover_euler_torus_exterior(-3i64, 2, 6).unwrap(), -7);
        assert!(matches!(
            cover_euler_torus_exterior(4i64, 2, 8),
            Err(Error::InvalidKnot(_))
        ));
        assert!(matches!(
            cover_euler_torus_exterior(1i64, 2, 2),
            Err(Error::InvalidKnot(_))
        ));
        assert!(matches!(
            cover_euler_torus_exterior(3i64, 2, 5),
            Err(Error::InvalidCoverDegree { .. })
        ));
        assert!(matches!(
            cover_euler_torus_exterior(3i64, 2, 0),
            Err(Error::InvalidCoverDegree { .. })
        ));
        assert!(matches!(
            cover_euler_torus_exterior(3i64, 2, -6),
            Err(Error::InvalidCoverDegree { .. })
        ));
    }

    #[test]
    fn cover_euler_cable_worked_examples() {
        assert_eq!(cover_euler_cable(2i64, 2).unwrap(), -3);
        assert_eq!(cover_euler_cable(4i64, 4).unwrap(), -7);
        assert_eq!(cover_euler_cable(3i64, 6).unwrap(), -10);
        assert!(matches!(
            cover_euler_cable(1i64, 2),
            Err(Error::InvalidFiberOrder { .. })
        ));
        assert!(matches!(
            cover_euler_cable(3i64, 4),
            Err(Error::InvalidCoverDegree { .. })
        ));
        assert!(matches!(
            cover_euler_cable(3i64, 0),
            Err(Error::InvalidCoverDegree { .. })
        ));
    }

    #[test]
    fn budgets_are_attained_by_minimal_covers() {
        // The regular-fiber budgets are twice the smallest one-component
        // cover values: chi(3,2 cover of degree 12) = -14 and
        // 2 * chi(cable cover of degree 2 at q = 2) = -6.
        assert_eq!(
            min_euler_budget::<i64>(EulerBudget::TorusExteriorRegularFiber),
            cover_euler_torus_exterior(3i64, 2, 12).unwrap()
        );
        assert_eq!(
            min_euler_budget::<i64>(EulerBudget::CableRegularFiber),
            2 * cover_euler_cable(2i64, 2).unwrap()
        );
        assert_eq!(
            min_euler_budget::<i64>(EulerBudget::TorusExteriorCriticalFiber),
            -4
        );
        assert_eq!(min_euler_budget::<i64>(EulerBudget::CableCriticalFiber), -4);
        assert_eq!(min_euler_budget::<i64>(EulerBudget::AdjacentPair), -4);
    }

    #[test]
    fn narrow_scalars_surface_overflow() {
        // 1 + k*p*q overflows i8 for k = 5, p = 11, q = 3.
        let space = CableSpace::new(11i8, 3).unwrap();
        assert_eq!(planar_b_class(&space, 5i8), Err(Error::Overflow));
        // -2d overflows i8 at d = 66.
        assert_eq!(cover_euler_cable(3i8, 66i8), Err(Error::Overflow));
    }

    #[test]
    fn surface_class_serializes_with_kind_and_params() {
        let h = horizontal_class(&cs(3, 2), 1, 1).unwrap();
        let json = serde_json::to_value(&h).unwrap();
        assert_eq!(json["kind"], "horizontal");
        assert_eq!(json["params"]["m"], 1);
        assert_eq!(json["params"]["n"], 1);
        assert_eq!(json["outer"]["count"], 2);
        assert_eq!(json["outer"]["slope"], serde_json::json!([2, 1]));
        assert_eq!(json["inner"]["slope"], serde_json::json!([8, 1]));
        assert_eq!(json["euler"], -1);

        let v = vertical_class(&cs(3, 2));
        let json = serde_json::to_value(&v).unwrap();
        assert_eq!(json["kind"], "vertical");
        assert_eq!(json["params"], serde_json::json!({}));

        let b = planar_b_class(&cs(3, 2), -1).unwrap();
        let json = serde_json::to_value(&b).unwrap();
        assert_eq!(json["kind"], "planar_b");
        assert_eq!(json["params"]["k"], -1);
    }

    proptest! {
        /// The component decomposition is consistent: count times the
        /// primitive slope recovers the total boundary class up to sign.
        #[test]
        fn horizontal_components_recompose_to_the_total_class(
            p in -20i64..=20,
            q in 2i64..=6,
            m in -15i64..=15,
            n in 0i64..=15,
        ) {
            let space = match CableSpace::new(p, q) { Ok(s) => s, Err(_) => return Ok(()) };
            let h = match horizontal_class(&space, m, n) { Ok(h) => h, Err(_) => return Ok(()) };
            let a = n + m * p;
            let outer_total = (h.outer.count * h.outer.slope.num(), h.outer.count * h.outer.slope.den());
            prop_assert!(outer_total == (a, q * m) || outer_total == (-a, -q * m));
            let inner_total = (h.inner.count * h.inner.slope.num(), h.inner.count * h.inner.slope.den());
            prop_assert!(inner_total == (q * a, m) || inner_total == (-q * a, -m));
        }

        /// Each horizontal class is an orientable surface: 2 - chi - #boundary
        /// is an even nonnegative integer (twice the genus).
        #[test]
        fn horizontal_euler_data_names_a_real_surface(
            p in -20i64..=20,
            q in 2i64..=6,
            m in -15i64..=15,
            n in 0i64..=15,
        ) {
            let space = match CableSpace::new(p, q) { Ok(s) => s, Err(_) => return Ok(()) };
            let h = match horizontal_class(&space, m, n) { Ok(h) => h, Err(_) => return Ok(()) };
            let boundary = h.outer.count + h.inner.count;
            let twice_genus = 2 - h.euler - boundary;
            prop_assert!(twice_genus >= 0, "negative genus for ({p},{q}) m={m} n={n}");
            prop_assert_eq!(twice_genus % 2, 0);
        }
    }
}
