//! Library half of the `cablecalc` command-line tool.
//!
//! The binary's subcommands are thin wrappers over these modules:
//!
//! - [`parse`]: knot descriptors, cable-space pairs, parameter ranges, and
//!   search targets;
//! - [`grid`]: finite parameter grids with deterministic enumeration;
//! - [`output`]: report shapes and the JSON/CSV/JSONL writers;
//! - [`suites`]: the named property suites behind `verify`;
//! - [`threads`]: worker-count resolution and order-preserving sharding;
//! - [`error`]: CLI errors and their process exit codes.

pub mod error;
pub mod grid;
pub mod output;
pub mod parse;
pub mod suites;
pub mod threads;

pub use error::{CliError, Result};
