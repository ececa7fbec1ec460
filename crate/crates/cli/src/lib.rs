//! Command-line front end: JSON documents in, verdicts or documents out.

mod commands;
pub mod docs;
mod report;

pub use commands::{run, supertrace_on, Cli, CliError, Command, Output};
