//! `cablecalc`: bridge spectra, gap searches, and cable-space surface
//! classification for iterated torus knots.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use cablecalc::error::{exit_code_for, CliError, Result, VERIFY_FAILURE};
use cablecalc::grid::GridSpec;
use cablecalc::output::{
    enum_record, spectrum_report, write_enum_records, write_spectrum_report, write_surface_classes,
    EnumRecord, OutputFormat,
};
use cablecalc::parse::{
    parse_cable_pair, parse_knot_descriptor, parse_param_pair, parse_param_range,
    parse_search_target, SearchTarget,
};
use cablecalc::suites::{run_all, Fault};
use cablecalc::threads::{map_ordered, resolve_thread_count};
use cablecalc_core::cablespace::{
    horizontal_class, planar_a_class, planar_b_class, vertical_class, CableSpace, SurfaceClass,
};
use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "cablecalc",
    version,
    about = "Bridge spectra and essential-surface classification for iterated torus knots",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format for data records.
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: OutputFormat,

    /// Write data to this file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Bridge-spectrum report for one knot.
    ///
    /// The descriptor is comma-separated "(p,q)" pairs, first pair the base
    /// torus knot — e.g. "(3,2),(21,4)" — or the JSON form
    /// {"base":[p,q],"cables":[[p,q],...]}.
    Spectrum {
        #[arg(value_name = "KNOT", allow_hyphen_values = true)]
        descriptor: String,
    },

    /// Classify essential surfaces in the cable space C(p,q).
    ///
    /// Each family flag may repeat; ranges are written "a" or "a..b"
    /// (inclusive). Parameter combinations that name no surface in the
    /// family are skipped silently.
    Classify {
        /// The cable-space pair, "p,q" or "(p,q)".
        #[arg(value_name = "PAIR", allow_hyphen_values = true)]
        pair: String,

        /// Emit the saturated annulus class.
        #[arg(long)]
        vertical: bool,

        /// Branched multi-sections by "M,N" (each side a value or range).
        #[arg(long, value_name = "M,N", allow_hyphen_values = true)]
        horizontal: Vec<String>,

        /// Planar one-bridge surfaces by outer slope "L,M".
        #[arg(long, value_name = "L,M", allow_hyphen_values = true)]
        planar_a: Vec<String>,

        /// Planar twisted surfaces by twisting parameter K.
        #[arg(long, value_name = "K", allow_hyphen_values = true)]
        planar_b: Vec<String>,
    },

    /// Enumerate every valid grid knot with its invariants.
    Enumerate {
        #[command(flatten)]
        grid: GridArgs,
    },

    /// Search the grid for knots matching a spectrum or gap target.
    Search {
        #[command(flatten)]
        grid: GridArgs,

        /// "spectrum=8,3,0" or "gaps=1:5,2:3".
        #[arg(long, value_name = "TARGET")]
        target: String,
    },

    /// Run every property suite over the grid.
    Verify {
        #[command(flatten)]
        grid: GridArgs,

        #[arg(long, hide = true)]
        inject_fault: bool,
    },
}

#[derive(Args)]
struct GridArgs {
    /// Largest |p| at any level.
    #[arg(long, value_name = "N", default_value_t = 25)]
    p_max: i64,

    /// Largest q at any level.
    #[arg(long, value_name = "N", default_value_t = 4)]
    q_max: i64,

    /// Most cabling levels above the base.
    #[arg(long = "depth", value_name = "N", default_value_t = 2)]
    depth_max: usize,

    /// Keep only knots within the admissible range.
    #[arg(long)]
    admissible_only: bool,
}

impl From<&GridArgs> for GridSpec {
    fn from(args: &GridArgs) -> Self {
        GridSpec {
            p_max: args.p_max,
            q_max: args.q_max,
            depth_max: args.depth_max,
            admissible_only: args.admissible_only,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // Usage problems exit 1; --help and --version exit 0.
            let printed_to_stderr = err.use_stderr();
            let _ = err.print();
            return if printed_to_stderr {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(&cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            exit_code_for(&err)
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode> {
    match &cli.command {
        Command::Spectrum { descriptor } => {
            let knot = parse_knot_descriptor(descriptor)?;
            let report = spectrum_report(&knot)?;
            with_writer(cli, |out| {
                write_spectrum_report(out, cli.format, &knot, &report)
            })?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Classify {
            pair,
            vertical,
            horizontal,
            planar_a,
            planar_b,
        } => {
            let (p, q) = parse_cable_pair(pair)?;
            let space = CableSpace::new(p, q)?;
            let classes = collect_classes(&space, *vertical, horizontal, planar_a, planar_b)?;
            with_writer(cli, |out| write_surface_classes(out, cli.format, &classes))?;
            eprintln!(
                "classified {} surface class(es) in C({p},{q})",
                classes.len()
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Enumerate { grid } => {
            let records = enumerate_records(&grid.into())?;
            with_writer(cli, |out| write_enum_records(out, cli.format, &records))?;
            let admissible = records.iter().filter(|r| r.admissible).count();
            eprintln!(
                "enumerated {} knot(s), {admissible} admissible",
                records.len()
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Search { grid, target } => {
            let target = parse_search_target(target)?;
            let records = enumerate_records(&grid.into())?;
            let matches: Vec<EnumRecord> = records
                .into_iter()
                .filter(|r| record_matches(r, &target))
                .collect();
            with_writer(cli, |out| write_enum_records(out, cli.format, &matches))?;
            eprintln!("matched {} knot(s)", matches.len());
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { grid, inject_fault } => {
            let fault = if *inject_fault {
                Fault::FlipTopSign
            } else {
                Fault::None
            };
            let workers = resolve_thread_count()?;
            let outcomes = run_all(&grid.into(), workers, fault)?;
            let mut all_passed = true;
            for outcome in &outcomes {
                if outcome.passed() {
                    println!("suite {}: PASS ({} checks)", outcome.name, outcome.checked);
                } else {
                    all_passed = false;
                    println!(
                        "suite {}: FAIL ({} of {} checks violated)",
                        outcome.name, outcome.violations, outcome.checked
                    );
                    for witness in &outcome.witnesses {
                        println!("  witness: {witness}");
                    }
                }
            }
            Ok(if all_passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(VERIFY_FAILURE)
            })
        }
    }
}

/// Enumerate the grid and compute every row, sharding across workers.
fn enumerate_records(grid: &GridSpec) -> Result<Vec<EnumRecord>> {
    let workers = resolve_thread_count()?;
    let knots = grid.knots()?;
    map_ordered(knots, workers, enum_record)
        .into_iter()
        .collect()
}

fn record_matches(record: &EnumRecord, target: &SearchTarget) -> bool {
    match target {
        SearchTarget::Spectrum(want) => record.spectrum.as_deref() == Some(want.as_slice()),
        SearchTarget::Gaps(want) => record.gaps.as_ref().is_some_and(|gaps| {
            gaps.len() == want.len()
                && gaps
                    .iter()
                    .zip(want)
                    .all(|(g, &(index, order))| g.index == index && g.order == order)
        }),
    }
}

/// Build the requested classes in deterministic order: vertical first, then
/// horizontal, planar one-bridge, and twisted families, each ascending by
/// parameters in flag order. Range combinations naming no surface in the
/// family are skipped.
fn collect_classes(
    space: &CableSpace<i64>,
    vertical: bool,
    horizontal: &[String],
    planar_a: &[String],
    planar_b: &[String],
) -> Result<Vec<SurfaceClass<i64>>> {
    let mut classes = Vec::new();
    if vertical {
        classes.push(vertical_class(space));
    }
    for spec in horizontal {
        let (m_range, n_range) = parse_param_pair(spec)?;
        for m in m_range.iter() {
            for n in n_range.iter() {
                if let Ok(class) = horizontal_class(space, m, n) {
                    classes.push(class);
                }
            }
        }
    }
    for spec in planar_a {
        let (l_range, m_range) = parse_param_pair(spec)?;
        for l in l_range.iter() {
            for m in m_range.iter() {
                if let Ok(class) = planar_a_class(space, l, m) {
                    classes.push(class);
                }
            }
        }
    }
    for spec in planar_b {
        for k in parse_param_range(spec)?.iter() {
            if let Ok(class) = planar_b_class(space, k) {
                classes.push(class);
            }
        }
    }
    Ok(classes)
}

/// Run `write` against --output or stdout.
fn with_writer(cli: &Cli, write: impl FnOnce(&mut dyn Write) -> Result<()>) -> Result<()> {
    match &cli.output {
        Some(path) => {
            let file = File::create(path).map_err(CliError::Io)?;
            let mut out = BufWriter::new(file);
            write(&mut out)?;
            out.flush().map_err(CliError::Io)
        }
        None => {
            let stdout = std::io::stdout();
            let mut out = stdout.lock();
            write(&mut out)?;
            out.flush().map_err(CliError::Io)
        }
    }
}
