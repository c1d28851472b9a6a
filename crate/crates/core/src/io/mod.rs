//! Configuration, sweeps, tabular output, the claims registry and the commands behind the CLI.

pub mod claims;
pub mod commands;
pub mod config;
pub mod csv;
pub mod sweep;
