//! Command-line front end: each subcommand runs one verification suite and
//! produces a [`Report`] with a configuration echo, checksums of the data it
//! read and one clause per checked property.
//!
//! Exit codes are 0 when every clause passes, 1 on a failed clause and 2 on
//! bad input.

mod commands;
mod config;
mod report;

pub use commands::{
    cmd_dgla, cmd_fan, cmd_fukaya, cmd_normalize, cmd_transfer, residual_sweep, run, sample_tuples, NORMALIZED,
    QUADRATIC, RELATIONS, SHAPE,
};
pub use config::{
    Command, ConfigEcho, Format, RunConfig, DEFAULT_DGLA_SAMPLES, DEFAULT_GENUS, DEFAULT_SAMPLES, DEFAULT_SEED,
};
pub use report::{clause, CliError, Report, TOOL, VERSION};
