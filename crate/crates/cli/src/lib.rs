//! Command-line front end: bundled datasets, the subcommands and their reports.

pub mod commands;
pub mod datasets;
pub mod report;

pub use commands::{CliError, Outcome};
pub use report::Report;
