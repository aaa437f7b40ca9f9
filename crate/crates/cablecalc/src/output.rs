//! Report shapes and the three output formats.
//!
//! JSON and JSONL carry structured records; CSV flattens each record to one
//! row per knot with semicolon-joined spectrum cells (`8;3;0`) and
//! colon-paired gap cells (`1:5;2:3`). JSONL is the lossless format.

use std::io::Write;

use cablecalc_core::spectrum::{
    bridge_spectrum, gaps, h_genus, tunnel_number, validate, GapReport, IteratedTorusKnot,
};
use serde::Serialize;

use crate::error::Result;
use crate::parse::format_knot_inline;

/// Output format selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Jsonl,
}

/// The single-knot report: the spectrum with its derived invariants.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpectrumReport {
    pub spectrum: Vec<i64>,
    pub gaps: Vec<GapReport<i64>>,
    pub tunnel_number: usize,
    pub h_genus: usize,
    pub admissible: bool,
}

/// Compute the full report for one knot. Fails on invalid or non-admissible
/// knots with the library's diagnostic.
pub fn spectrum_report(knot: &IteratedTorusKnot<i64>) -> Result<SpectrumReport> {
    let spectrum = bridge_spectrum(knot)?;
    Ok(SpectrumReport {
        gaps: gaps(&spectrum),
        tunnel_number: tunnel_number(knot)?,
        h_genus: h_genus(knot)?,
        spectrum: spectrum.entries().to_vec(),
        admissible: true,
    })
}

/// One enumeration row: the knot plus its invariants, when admissible.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EnumRecord {
    pub knot: IteratedTorusKnot<i64>,
    pub admissible: bool,
    pub spectrum: Option<Vec<i64>>,
    pub gaps: Option<Vec<GapReport<i64>>>,
    pub tunnel_number: Option<usize>,
}

/// Build the row for one valid grid knot, computing invariants only for
/// admissible knots (the spectrum recursion does not apply to the rest).
pub fn enum_record(knot: IteratedTorusKnot<i64>) -> Result<EnumRecord> {
    let admissible = validate(&knot)?.admissible;
    if !admissible {
        return Ok(EnumRecord {
            knot,
            admissible,
            spectrum: None,
            gaps: None,
            tunnel_number: None,
        });
    }
    let spectrum = bridge_spectrum(&knot)?;
    Ok(EnumRecord {
        admissible,
        spectrum: Some(spectrum.entries().to_vec()),
        gaps: Some(gaps(&spectrum)),
        tunnel_number: Some(tunnel_number(&knot)?),
        knot,
    })
}

/// CSV cell for a spectrum: semicolon-joined entries, e.g. `8;3;0`.
pub fn spectrum_cell(entries: &[i64]) -> String {
    entries
        .iter()
        .map(i64::to_string)
        .collect::<Vec<_>>()
        .join(";")
}

/// CSV cell for gap reports: `index:order` pairs, semicolon-joined, e.g.
/// `1:5;2:3`.
pub fn gaps_cell(reports: &[GapReport<i64>]) -> String {
    reports
        .iter()
        .map(|g| format!("{}:{}", g.index, g.order))
        .collect::<Vec<_>>()
        .join(";")
}

const ENUM_HEADER: [&str; 5] = ["knot", "admissible", "spectrum", "gaps", "tunnel_number"];

fn enum_csv_row(record: &EnumRecord) -> [String; 5] {
    [
        format_knot_inline(&record.knot),
        record.admissible.to_string(),
        record
            .spectrum
            .as_deref()
            .map(spectrum_cell)
            .unwrap_or_default(),
        record.gaps.as_deref().map(gaps_cell).unwrap_or_default(),
        record
            .tunnel_number
            .map(|t| t.to_string())
            .unwrap_or_default(),
    ]
}

/// Write enumeration records in the requested format.
pub fn write_enum_records(
    out: &mut dyn Write,
    format: OutputFormat,
    records: &[EnumRecord],
) -> Result<()> {
    match format {
        OutputFormat::Json => {
            serde_json::to_writer(&mut *out, records)?;
            out.write_all(b"\n")?;
        }
        OutputFormat::Jsonl => {
            for record in records {
                serde_json::to_writer(&mut *out, record)?;
                out.write_all(b"\n")?;
            }
        }
        OutputFormat::Csv => {
            let mut writer = csv::Writer::from_writer(out);
            writer.write_record(ENUM_HEADER)?;
            for record in records {
                writer.write_record(enum_csv_row(record))?;
            }
            writer.flush()?;
        }
    }
    Ok(())
}

/// Write a single-knot spectrum report in the requested format. The CSV
/// form is the enumeration row for that knot.
pub fn write_spectrum_report(
    out: &mut dyn Write,
    format: OutputFormat,
    knot: &IteratedTorusKnot<i64>,
    report: &SpectrumReport,
) -> Result<()> {
    match format {
        OutputFormat::Json | OutputFormat::Jsonl => {
            serde_json::to_writer(&mut *out, report)?;
            out.write_all(b"\n")?;
        }
        OutputFormat::Csv => {
            let record = EnumRecord {
                knot: knot.clone(),
                admissible: report.admissible,
                spectrum: Some(report.spectrum.clone()),
                gaps: Some(report.gaps.clone()),
                tunnel_number: Some(report.tunnel_number),
            };
            write_enum_records(out, OutputFormat::Csv, std::slice::from_ref(&record))?;
        }
    }
    Ok(())
}

/// Write surface classes in the requested format.
pub fn write_surface_classes(
    out: &mut dyn Write,
    format: OutputFormat,
    classes: &[cablecalc_core::cablespace::SurfaceClass<i64>],
) -> Result<()> {
    match format {
        OutputFormat::Json => {
            serde_json::to_writer(&mut *out, classes)?;
            out.write_all(b"\n")?;
        }
        OutputFormat::Jsonl => {
            for class in classes {
                serde_json::to_writer(&mut *out, class)?;
                out.write_all(b"\n")?;
            }
        }
        OutputFormat::Csv => {
            let mut writer = csv::Writer::from_writer(out);
            writer.write_record([
                "kind",
                "params",
                "outer_count",
                "outer_slope",
                "inner_count",
                "inner_slope",
                "euler",
            ])?;
            for class in classes {
                use cablecalc_core::cablespace::SurfaceKind;
                let (kind, params) = match class.kind {
                    SurfaceKind::Vertical {} => ("vertical", String::new()),
                    SurfaceKind::Horizontal { m, n } => ("horizontal", format!("m={m};n={n}")),
                    SurfaceKind::PlanarA { l, m } => ("planar_a", format!("l={l};m={m}")),
                    SurfaceKind::PlanarB { k } => ("planar_b", format!("k={k}")),
                };
                writer.write_record([
                    kind.to_string(),
                    params,
                    class.outer.count.to_string(),
                    class.outer.slope.to_string(),
                    class.inner.count.to_string(),
                    class.inner.slope.to_string(),
                    class.euler.to_string(),
                ])?;
            }
            writer.flush()?;
        }
    }
    Ok(())
}
