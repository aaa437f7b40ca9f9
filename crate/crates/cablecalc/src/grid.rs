//! Finite parameter grids and their deterministic knot enumeration.

use cablecalc_core::spectrum::{validate, CablingParams, IteratedTorusKnot};

use crate::error::{CliError, Result};

/// Bounds for a finite enumeration of iterated torus knots: every level
/// satisfies `|p| <= p_max` and `2 <= q <= q_max`, and the number of cabling
/// levels above the base is at most `depth_max`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GridSpec {
    pub p_max: i64,
    pub q_max: i64,
    pub depth_max: usize,
    /// Keep only knots whose every cabling level clears the distance
    /// threshold.
    pub admissible_only: bool,
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec {
            p_max: 25,
            q_max: 4,
            depth_max: 2,
            admissible_only: false,
        }
    }
}

impl GridSpec {
    pub fn validate(&self) -> Result<()> {
        if self.p_max < 1 {
            return Err(CliError::Grid {
                reason: "p_max must be at least 1",
            });
        }
        if self.q_max < 2 {
            return Err(CliError::Grid {
                reason: "q_max must be at least 2",
            });
        }
        Ok(())
    }

    /// Every valid grid knot, in a deterministic order: depth ascending,
    /// then lexicographic by the parameter tuple (p ascending within each
    /// level, then q ascending, level by level). With `admissible_only`,
    /// knots with any near-fiber cabling level are dropped.
    pub fn knots(&self) -> Result<Vec<IteratedTorusKnot<i64>>> {
        self.validate()?;
        let mut out = Vec::new();
        for depth in 0..=self.depth_max {
            let mut stack = Vec::with_capacity(depth);
            self.extend(None, &mut stack, depth, &mut out);
        }
        Ok(out)
    }

    /// Depth-first extension of `stack` (below a chosen base, or choosing
    /// the base when `base` is `None`) to full length, pushing completed
    /// knots onto `out`.
    fn extend(
        &self,
        base: Option<CablingParams<i64>>,
        stack: &mut Vec<CablingParams<i64>>,
        depth: usize,
        out: &mut Vec<IteratedTorusKnot<i64>>,
    ) {
        let Some(base) = base else {
            for p in -self.p_max..=self.p_max {
                if p.abs() < 2 {
                    continue;
                }
                for q in 2..=self.q_max {
                    if gcd(p, q) == 1 {
                        self.extend(Some(CablingParams::new(p, q)), stack, depth, out);
                    }
                }
            }
            return;
        };
        if stack.len() == depth {
            let knot = IteratedTorusKnot::new(base, stack.clone());
            if self.admissible_only {
                let report = validate(&knot).expect("grid parameters stay in range");
                if !report.admissible {
                    return;
                }
            }
            out.push(knot);
            return;
        }
        let prev = if stack.is_empty() {
            base
        } else {
            stack[stack.len() - 1]
        };
        for p in -self.p_max..=self.p_max {
            for q in 2..=self.q_max {
                if gcd(p, q) != 1 {
                    continue;
                }
                // Pruning below a non-admissible level is sound: a knot is
                // admissible only if every level is.
                if self.admissible_only && (p - prev.p * prev.q * q).abs() <= 1 {
                    continue;
                }
                stack.push(CablingParams::new(p, q));
                self.extend(Some(base), stack, depth, out);
                stack.pop();
            }
        }
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    // Grid bounds keep both arguments far from the overflow edge.
    cablecalc_core::scalar::checked_gcd(a, b).expect("grid parameters stay in range")
}
