//! File formats and command implementations behind the `gdext` binary.

pub mod commands;
pub mod format;

pub use commands::{run, Cli, CliError, Output};
