//! Command-line front end: reads and writes structure-constant files, runs
//! the verification suites and the constructions, and reports verdicts.

pub mod commands;
pub mod schema;

pub use commands::{dispatch, run, Cli, CliError, Outcome};
