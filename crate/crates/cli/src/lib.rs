//! Command-line front end for `expalg-core`: expression parsing, config,
//! command dispatch and report rendering.

pub mod args;
pub mod commands;
pub mod config;
pub mod output;
pub mod parse;

pub use args::Cli;
pub use commands::{run, CliError};
pub use output::{Format, Outcome, Report};
