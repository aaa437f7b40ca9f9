//! Knot descriptors, cable-space pairs, parameter ranges, and search
//! targets, in both directions.
//!
//! The inline knot grammar is comma-separated `(p,q)` pairs, first pair the
//! base torus knot: `(3,2),(21,4)`. A descriptor starting with `{` is
//! instead parsed as the JSON form `{"base": [p, q], "cables": [[p, q], ...]}`.

use cablecalc_core::spectrum::{CablingParams, IteratedTorusKnot};

use crate::error::{CliError, Result};

/// Parse a knot descriptor in either the inline or the JSON form.
///
/// # Examples
///
/// ```
/// use cablecalc::parse::{format_knot_inline, parse_knot_descriptor};
///
/// let knot = parse_knot_descriptor("(3,2),(21,4)").unwrap();
/// assert_eq!(format_knot_inline(&knot), "(3,2),(21,4)");
/// let same = parse_knot_descriptor(r#"{"base":[3,2],"cables":[[21,4]]}"#).unwrap();
/// assert_eq!(knot, same);
/// ```
pub fn parse_knot_descriptor(text: &str) -> Result<IteratedTorusKnot<i64>> {
    let trimmed = text.trim();
    if trimmed.starts_with('{') {
        return serde_json::from_str(trimmed).map_err(|e| CliError::Descriptor {
            reason: "invalid descriptor JSON",
            token: e.to_string(),
        });
    }
    let mut pairs = Vec::new();
    let mut rest = trimmed;
    loop {
        let (pair, tail) = parse_pair(rest)?;
        pairs.push(pair);
        rest = tail.trim_start();
        if rest.is_empty() {
            break;
        }
        rest = match rest.strip_prefix(',') {
            Some(tail) => tail.trim_start(),
            None => {
                return Err(CliError::Descriptor {
                    reason: "expected `,` between pairs",
                    token: snippet(rest),
                })
            }
        };
        if rest.is_empty() {
            return Err(CliError::Descriptor {
                reason: "trailing `,` with no pair after it",
                token: snippet(trimmed),
            });
        }
    }
    let mut iter = pairs.into_iter();
    let base = iter.next().expect("parse_pair yields at least one pair");
    Ok(IteratedTorusKnot::new(base, iter.collect()))
}

/// Parse one `(p,q)` pair off the front of `text`, returning the remainder.
fn parse_pair(text: &str) -> Result<(CablingParams<i64>, &str)> {
    let body = text.strip_prefix('(').ok_or_else(|| CliError::Descriptor {
        reason: "expected `(` opening a pair",
        token: snippet(text),
    })?;
    let (inner, tail) = body.split_once(')').ok_or_else(|| CliError::Descriptor {
        reason: "unclosed pair: expected `)`",
        token: snippet(text),
    })?;
    let (p_text, q_text) = inner.split_once(',').ok_or_else(|| CliError::Descriptor {
        reason: "expected `p,q` inside the pair",
        token: snippet(inner),
    })?;
    let p = parse_int(p_text, "expected an integer for p")?;
    let q = parse_int(q_text, "expected an integer for q")?;
    Ok((CablingParams::new(p, q), tail))
}

fn parse_int(text: &str, reason: &'static str) -> Result<i64> {
    text.trim().parse().map_err(|_| CliError::Descriptor {
        reason,
        token: snippet(text.trim()),
    })
}

fn snippet(text: &str) -> String {
    const LIMIT: usize = 24;
    if text.len() > LIMIT {
        let cut = (1..=LIMIT)
            .rev()
            .find(|&i| text.is_char_boundary(i))
            .unwrap_or(0);
        format!("{}…", &text[..cut])
    } else {
        text.to_string()
    }
}

/// Render a knot in the inline grammar; the result re-parses to an equal
/// knot.
pub fn format_knot_inline(knot: &IteratedTorusKnot<i64>) -> String {
    knot.to_string()
}

/// Parse a cable-space pair `p,q` or `(p,q)`.
pub fn parse_cable_pair(text: &str) -> Result<(i64, i64)> {
    let trimmed = text.trim();
    let inner = match trimmed.strip_prefix('(') {
        Some(body) => body.strip_suffix(')').ok_or_else(|| CliError::Descriptor {
            reason: "unclosed pair: expected `)`",
            token: snippet(trimmed),
        })?,
        None => trimmed,
    };
    let (p_text, q_text) = inner.split_once(',').ok_or_else(|| CliError::Descriptor {
        reason: "expected `p,q`",
        token: snippet(inner),
    })?;
    Ok((
        parse_int(p_text, "expected an integer for p")?,
        parse_int(q_text, "expected an integer for q")?,
    ))
}

/// An inclusive integer range written `a` or `a..b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParamRange {
    pub start: i64,
    pub end: i64,
}

impl ParamRange {
    pub fn iter(self) -> impl Iterator<Item = i64> {
        self.start..=self.end
    }
}

/// Parse `a` or `a..b` (inclusive, `a <= b`).
pub fn parse_param_range(text: &str) -> Result<ParamRange> {
    let trimmed = text.trim();
    let range = match trimmed.split_once("..") {
        Some((a, b)) => ParamRange {
            start: parse_range_int(a)?,
            end: parse_range_int(b)?,
        },
        None => {
            let v = parse_range_int(trimmed)?;
            ParamRange { start: v, end: v }
        }
    };
    if range.start > range.end {
        return Err(CliError::ParamSpec {
            reason: "range start exceeds range end",
            token: snippet(trimmed),
        });
    }
    Ok(range)
}

fn parse_range_int(text: &str) -> Result<i64> {
    text.trim().parse().map_err(|_| CliError::ParamSpec {
        reason: "expected an integer or `a..b` range",
        token: snippet(text.trim()),
    })
}

/// Parse a two-parameter specification `SPEC,SPEC` where each side is an
/// integer or an `a..b` range, e.g. `1,0..5` or `-2..2,1`.
pub fn parse_param_pair(text: &str) -> Result<(ParamRange, ParamRange)> {
    let trimmed = text.trim();
    let (a, b) = trimmed.split_once(',').ok_or_else(|| CliError::ParamSpec {
        reason: "expected two comma-separated values or ranges",
        token: snippet(trimmed),
    })?;
    Ok((parse_param_range(a)?, parse_param_range(b)?))
}

/// What a search is looking for: an exact spectrum or an exact gap list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchTarget {
    /// Match knots whose full spectrum equals these entries.
    Spectrum(Vec<i64>),
    /// Match knots whose gap reports equal these (index, order) pairs.
    Gaps(Vec<(usize, i64)>),
}

/// Parse a search target: `spectrum=8,3,0` or `gaps=1:5,2:3`.
///
/// Gap indices must be strictly increasing and orders at least 2.
pub fn parse_search_target(text: &str) -> Result<SearchTarget> {
    let trimmed = text.trim();
    if let Some(body) = trimmed.strip_prefix("spectrum=") {
        let entries = body
            .split(',')
            .map(|t| {
                t.trim().parse::<i64>().map_err(|_| CliError::Target {
                    reason: "expected an integer spectrum entry",
                    token: snippet(t.trim()),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        if entries.is_empty() {
            return Err(CliError::Target {
                reason: "empty spectrum",
                token: snippet(body),
            });
        }
        return Ok(SearchTarget::Spectrum(entries));
    }
    if let Some(body) = trimmed.strip_prefix("gaps=") {
        let mut gaps = Vec::new();
        if !body.trim().is_empty() {
            for part in body.split(',') {
                let (index_text, order_text) =
                    part.split_once(':').ok_or_else(|| CliError::Target {
                        reason: "expected `index:order`",
                        token: snippet(part.trim()),
                    })?;
                let index = index_text
                    .trim()
                    .parse::<usize>()
                    .map_err(|_| CliError::Target {
                        reason: "expected a nonnegative gap index",
                        token: snippet(index_text.trim()),
                    })?;
                let order = order_text
                    .trim()
                    .parse::<i64>()
                    .map_err(|_| CliError::Target {
                        reason: "expected an integer gap order",
                        token: snippet(order_text.trim()),
                    })?;
                if order < 2 {
                    return Err(CliError::Target {
                        reason: "gap orders are at least 2",
                        token: snippet(part.trim()),
                    });
                }
                if let Some(&(last_index, _)) = gaps.last() {
                    if index <= last_index {
                        return Err(CliError::Target {
                            reason: "gap indices must be strictly increasing",
                            token: snippet(part.trim()),
                        });
                    }
                }
                gaps.push((index, order));
            }
        }
        return Ok(SearchTarget::Gaps(gaps));
    }
    Err(CliError::Target {
        reason: "expected `spectrum=...` or `gaps=...`",
        token: snippet(trimmed),
    })
}
